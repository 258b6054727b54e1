"""Graph-space sweeps and the fixed regression table.

Sweeps are deterministic regardless of worker count: exhaustive mode splits
the graph index range [0, d^(n(n-1)/2)) into contiguous chunks, random mode
splits the derived-seed range, and results aggregate with order-independent
reductions (sums plus an index minimum for the first hit).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .dense import SIZE_LIMIT, is_ame_dense
from .graphs import Multigraph, from_edge_list, graph_count, graph_from_index, random_graph
from .verify import DEFAULT_BUDGET, is_ame_bruteforce, min_stabilizer_weight
from .witness import InvariantViolationError, TheoremContradictionError, extract_witness


@dataclass(frozen=True)
class SweepReport:
    n: int
    d: int
    mode: str
    graphs_checked: int
    ame_found: int
    first_ame_graph: Multigraph | None
    witness_failures: int
    elapsed: float


def _check_one(g: Multigraph, budget: int, run_witness: bool):
    verdict = is_ame_bruteforce(g, budget=budget)
    failed = 0
    if run_witness:
        try:
            extract_witness(g)
        except (TheoremContradictionError, InvariantViolationError):
            failed = 1
    return verdict.is_ame, failed


def _sweep_range(args):
    """Worker: scan one contiguous index range, return mergeable counters."""
    n, d, lo, hi, budget, mode, seed = args
    run_witness = n % 4 == 0 and d % 2 == 0
    ame_found = 0
    first_idx = None
    witness_failures = 0
    for idx in range(lo, hi):
        if mode == "exhaustive":
            g = graph_from_index(n, d, idx)
        else:
            g = random_graph(n, d, seed + idx)
        is_ame, failed = _check_one(g, budget, run_witness)
        witness_failures += failed
        if is_ame:
            ame_found += 1
            if first_idx is None:
                first_idx = idx
    return hi - lo, ame_found, first_idx, witness_failures


def _split(total: int, pieces: int):
    step = max(1, -(-total // pieces))
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def search(n: int, d: int, *, mode: str = "exhaustive", seed: int = 0,
           count: int = 0, budget: int = DEFAULT_BUDGET,
           jobs: int = 1) -> SweepReport:
    """Run the AME check (and witness extraction where applicable) over
    graph space.

    mode "exhaustive" visits every labeled graph once; mode "random" visits
    ``count`` graphs drawn with seeds seed, seed+1, .... When n = 4k and d
    is even every graph additionally goes through witness extraction, with
    failures tallied (zero expected).
    """
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"unknown sweep mode {mode!r}")
    if mode == "random" and count < 1:
        raise ValueError("random mode needs count >= 1")
    total = graph_count(n, d) if mode == "exhaustive" else count
    start_time = time.perf_counter()

    jobs = max(1, jobs)
    tasks = [(n, d, lo, hi, budget, mode, seed)
             for lo, hi in _split(total, jobs * 4)]
    if jobs == 1:
        parts = [_sweep_range(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_range, tasks))

    checked = sum(p[0] for p in parts)
    ame_found = sum(p[1] for p in parts)
    witness_failures = sum(p[3] for p in parts)
    first_indices = [p[2] for p in parts if p[2] is not None]
    first_graph = None
    if first_indices:
        idx = min(first_indices)
        first_graph = (graph_from_index(n, d, idx) if mode == "exhaustive"
                       else random_graph(n, d, seed + idx))
    elapsed = time.perf_counter() - start_time
    return SweepReport(n, d, mode, checked, ame_found, first_graph,
                       witness_failures, elapsed)


def parity_check(n: int, d: int, count: int, seed: int,
                 budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """Evaluate the alternating determinant sum on random graphs.

    Returns (checked, violations); violations is zero unless the exact
    linear algebra is broken.
    """
    from .witness import signed_delta_sum

    violations = 0
    for i in range(count):
        g = random_graph(n, d, seed + i)
        try:
            signed_delta_sum(g)
        except InvariantViolationError:
            violations += 1
    return count, violations


def cycle_graph(n: int, d: int) -> Multigraph:
    """The n-cycle with unit multiplicities."""
    edges = [(i, i % n + 1, 1) for i in range(1, n + 1)]
    return from_edge_list(n, d, edges)


@dataclass(frozen=True)
class RegressionRow:
    label: str
    expected: str            # "none", "exists", or "record"
    observed: str
    passed: bool
    gated: bool              # informational rows never fail the run
    detail: str


def _dense_recheck(g: Multigraph | None) -> bool:
    if g is None or g.d ** g.n > SIZE_LIMIT:
        return True
    return is_ame_dense(g, 1e-9)


def regression(jobs: int = 1, budget: int = DEFAULT_BUDGET) -> list[RegressionRow]:
    """Fixed table of known existence/nonexistence facts at desk scale.

    Every "exists" hit is re-verified by the dense oracle where the
    dimension permits. The (4,5) row records the outcome without gating,
    since neither answer is established ground truth here.
    """
    rows = []

    def sweep_row(n, d, expected, gated=True):
        report = search(n, d, budget=budget, jobs=jobs)
        exists = report.ame_found > 0
        observed = "exists" if exists else "none"
        ok = True
        detail = (f"{report.graphs_checked} graphs, {report.ame_found} AME, "
                  f"{report.witness_failures} witness failures")
        if n % 4 == 0 and d % 2 == 0 and report.witness_failures:
            ok = False
        if expected == "none":
            ok = ok and not exists
        elif expected == "exists":
            ok = ok and exists and _dense_recheck(report.first_ame_graph)
        else:  # record only
            if exists and not _dense_recheck(report.first_ame_graph):
                ok = False
        rows.append(RegressionRow(f"N={n}, d={d} exhaustive", expected,
                                  observed, ok, gated, detail))

    sweep_row(4, 2, "none")
    sweep_row(4, 3, "exists")
    sweep_row(4, 4, "none")
    sweep_row(4, 5, "record", gated=False)
    sweep_row(4, 6, "none")

    c5 = cycle_graph(5, 2)
    w, _ = min_stabilizer_weight(c5)
    ok = w == 3 and is_ame_dense(c5, 1e-9)
    rows.append(RegressionRow("N=5, d=2 five-cycle", "exists",
                              "exists" if ok else "none", ok, True,
                              f"min stabilizer weight {w}"))

    sweep_row(6, 2, "exists")
    return rows
