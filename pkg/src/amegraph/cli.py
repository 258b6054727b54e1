"""Command-line front end.

Machine-readable output is UTF-8 JSON on stdout (enable with --json); human
summaries always go to stderr. Exit codes: 0 for AME / all expectations met,
1 for not-AME / an expectation failed, 2 for usage or resource errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dense import is_ame_dense
from .graphs import GraphFormatError, load_graph, serialize_graph
from .pauli import format_pauli
from .sweep import parity_check, regression, search
from .verify import DEFAULT_BUDGET, BudgetExceededError, is_ame_bruteforce
from .witness import extract_witness


def _say(msg: str):
    print(msg, file=sys.stderr)


def _emit(doc, as_json: bool):
    if as_json:
        print(json.dumps(doc, indent=2))


def cmd_check(args) -> int:
    g = load_graph(args.graph)
    verdict = is_ame_bruteforce(g, budget=args.budget, full_min=args.full_min)
    _emit({
        "is_ame": verdict.is_ame,
        "min_weight": verdict.min_weight,
        "witness_alpha": list(verdict.witness_alpha) if verdict.witness_alpha else None,
        "checked_count": verdict.checked_count,
    }, args.json)
    if verdict.is_ame:
        _say(f"AME: minimum stabilizer weight {verdict.min_weight} "
             f"over {verdict.checked_count} elements")
        return 0
    _say(f"not AME: weight-{verdict.min_weight} element at alpha = "
         f"{verdict.witness_alpha}")
    return 1


def cmd_oracle_check(args) -> int:
    g = load_graph(args.graph)
    ok = is_ame_dense(g, args.tol)
    _emit({"is_ame": ok, "tol": args.tol}, args.json)
    _say(f"dense oracle: {'AME' if ok else 'not AME'} at tolerance {args.tol}")
    return 0 if ok else 1


def cmd_witness(args) -> int:
    g = load_graph(args.graph)
    report = extract_witness(g)
    _emit({
        "k": report.k,
        "chosen_j": report.chosen_j,
        "deltas": {str(j): v for j, v in sorted(report.deltas.items())},
        "kernel": list(report.kernel),
        "alpha": list(report.alpha),
        "witness": format_pauli(report.witness),
        "witness_weight": report.witness_weight,
    }, args.json)
    _say(f"witness: {format_pauli(report.witness)} "
         f"(weight {report.witness_weight}, site j = {report.chosen_j})")
    _say("determinants: " + ", ".join(
        f"D[{j}] = {v}" for j, v in sorted(report.deltas.items())))
    return 0


def cmd_search(args) -> int:
    report = search(args.n, args.d, mode=args.mode, seed=args.seed,
                    count=args.count, budget=args.budget, jobs=args.jobs)
    first = (json.loads(serialize_graph(report.first_ame_graph))
             if report.first_ame_graph else None)
    _emit({
        "n": report.n, "d": report.d, "mode": report.mode,
        "graphs_checked": report.graphs_checked,
        "ame_found": report.ame_found,
        "first_ame_graph": first,
        "witness_failures": report.witness_failures,
        "elapsed": report.elapsed,
    }, args.json)
    _say(f"checked {report.graphs_checked} graphs at (N={report.n}, d={report.d}): "
         f"{report.ame_found} AME, {report.witness_failures} witness failures "
         f"[{report.elapsed:.2f}s]")
    guaranteed_negative = report.n % 4 == 0 and report.d % 2 == 0
    if guaranteed_negative and (report.ame_found or report.witness_failures):
        return 1
    return 0


def cmd_parity_test(args) -> int:
    checked, violations = parity_check(args.n, args.d, args.count, args.seed,
                                       budget=args.budget)
    _emit({"n": args.n, "d": args.d, "seed": args.seed,
           "checked": checked, "violations": violations}, args.json)
    _say(f"alternating determinant sum: {checked - violations}/{checked} zero")
    return 0 if violations == 0 else 1


def cmd_regression(args) -> int:
    rows = regression(jobs=args.jobs, budget=args.budget)
    _emit([{
        "label": r.label, "expected": r.expected, "observed": r.observed,
        "passed": r.passed, "gated": r.gated, "detail": r.detail,
    } for r in rows], args.json)
    failed = 0
    for r in rows:
        status = "PASS" if r.passed else ("FAIL" if r.gated else "RECORDED")
        _say(f"{status:8s} {r.label}: expected {r.expected}, observed "
             f"{r.observed} ({r.detail})")
        if r.gated and not r.passed:
            failed += 1
    _say(f"{len(rows) - failed}/{len(rows)} rows as expected")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a JSON report on stdout")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="parallel workers for sweeps")
    common.add_argument("--seed", type=int, default=0,
                        help="base seed for randomized modes")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum d^N enumerated per graph")

    parser = argparse.ArgumentParser(
        prog="amegraph",
        description="Decide absolute maximal entanglement of qudit graph "
                    "states and extract low-weight stabilizer witnesses.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="exact AME check by stabilizer weight scan")
    p.add_argument("--graph", required=True, help="graph file (JSON or edge list)")
    p.add_argument("--full-min", action="store_true",
                   help="disable early exit; report the exact minimum weight")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle-check", parents=[common],
                       help="numerical AME check via dense partial traces")
    p.add_argument("--graph", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("witness", parents=[common],
                       help="construct a weight <= N/2 stabilizer element "
                            "(N divisible by 4, even d)")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("search", parents=[common],
                       help="sweep graph space and tally AME hits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "random"],
                   default="exhaustive")
    p.add_argument("--count", type=int, default=1000,
                   help="samples in random mode")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("parity-test", parents=[common],
                       help="check the alternating determinant identity on "
                            "random graphs")
    p.add_argument("--n", type=int, required=True, help="vertex count (4k)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", type=int, default=1000)
    p.set_defaults(func=cmd_parity_test)

    p = sub.add_parser("regression", parents=[common],
                       help="run the fixed table of known existence facts")
    p.set_defaults(func=cmd_regression)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, BudgetExceededError, ValueError, OSError) as exc:
        _say(f"error: {exc}")
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
