"""Independent numerical validator built on explicit matrices and vectors.

Everything here works with dense complex arithmetic so it shares no code
path with the exact symplectic machinery: states are built by applying the
stabilizer projector factors to a random vector, and the entanglement
condition is checked literally, subset by subset, via partial traces.

Conventions: site 1 is the leftmost (most significant) Kronecker factor,
and a mixed single-site factor is X^a Z^b, X-part times Z-part. The
symplectic layer ignores phases, so cross-checks against it must quotient
out a global phase.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil

import numpy as np

from ._mixedradix import digit_block_cached
from .graphs import Multigraph
from .pauli import SymplecticPauli

SIZE_LIMIT = 4096


class DenseOracleError(RuntimeError):
    """Internal failure of the dense construction (signals a bug)."""


def _check_size(d: int, n: int):
    if d ** n > SIZE_LIMIT:
        raise ValueError(
            f"dense operator dimension d^N = {d ** n} exceeds limit {SIZE_LIMIT}")


def shift_matrix(d: int) -> np.ndarray:
    """Cyclic shift X: |j> -> |j+1 mod d>."""
    x = np.zeros((d, d), dtype=complex)
    for j in range(d):
        x[(j + 1) % d, j] = 1.0
    return x


def clock_matrix(d: int) -> np.ndarray:
    """Phase operator Z = diag(1, w, ..., w^(d-1)), w = exp(2*pi*i/d)."""
    omega = np.exp(2j * np.pi / d)
    return np.diag(omega ** np.arange(d))


def pauli_matrix(p: SymplecticPauli) -> np.ndarray:
    """Dense matrix of a symplectic Pauli, site factors X^x_i Z^z_i."""
    d = p.d
    _check_size(d, p.num_sites)
    x, z = shift_matrix(d), clock_matrix(d)
    out = np.ones((1, 1), dtype=complex)
    for a, b in zip(p.x, p.z):
        factor = np.linalg.matrix_power(x, a) @ np.linalg.matrix_power(z, b)
        out = np.kron(out, factor)
    return out


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state on n qudits of dimension d."""

    d: int
    n: int
    amplitudes: np.ndarray

    @property
    def dim(self) -> int:
        return self.d ** self.n


def _apply_generator(g: Multigraph, i: int, psi: np.ndarray) -> np.ndarray:
    """Apply generator g_i to a state vector without materializing it.

    On a basis state |b_1...b_N>, g_i contributes the phase
    w^(sum_j Gamma_ij b_j) and increments digit i, so the action is a
    phase-decorated permutation of the amplitudes.
    """
    d, n = g.d, g.n
    dim = d ** n
    digits = digit_block_cached(n, d, 0, dim, first_digit_fastest=False)
    row = np.asarray(g.adjacency[i - 1], dtype=np.int64)
    omega = np.exp(2j * np.pi / d)
    phases = omega ** ((digits @ row) % d)
    stride = d ** (n - i)
    col = digits[:, i - 1]
    idx = np.arange(dim)
    target = np.where(col < d - 1, idx + stride, idx - (d - 1) * stride)
    out = np.empty(dim, dtype=complex)
    out[target] = phases * psi
    return out


def graph_state(g: Multigraph, seed: int = 0) -> StateVector:
    """Construct the joint +1 eigenstate of all generators.

    Applies each projector factor (1/d) * sum_j g_i^j in turn to a seeded
    random complex vector; the product of the factors is the rank-1
    projector onto the graph state, so a random vector lands in its range
    with probability 1. Retries with a fresh vector on norm collapse and
    verifies every eigen-relation g_i |G> = |G> before returning.
    """
    d, n = g.d, g.n
    _check_size(d, n)
    dim = d ** n
    rng = np.random.default_rng(seed)
    for _ in range(8):
        psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        for i in range(1, n + 1):
            acc = psi.copy()
            cur = psi
            for _ in range(d - 1):
                cur = _apply_generator(g, i, cur)
                acc += cur
            psi = acc / d
        norm = np.linalg.norm(psi)
        if norm < 1e-9:
            continue
        psi /= norm
        for i in range(1, n + 1):
            if np.max(np.abs(_apply_generator(g, i, psi) - psi)) > 1e-9:
                raise DenseOracleError(
                    f"constructed state is not fixed by generator {i}")
        return StateVector(d, n, psi)
    raise DenseOracleError("projector collapsed the random vector 8 times")


def partial_trace(state: StateVector, q) -> np.ndarray:
    """Reduced density operator on the complement of the site subset q.

    q holds 1-based site labels. Computed by reshaping the state into one
    axis per site and contracting the traced axes.
    """
    q = sorted(set(q))
    if any(not 1 <= s <= state.n for s in q) or len(q) > state.n:
        raise ValueError(f"invalid site subset {q} for {state.n} sites")
    keep = [s - 1 for s in range(1, state.n + 1) if s not in q]
    traced = [s - 1 for s in q]
    d = state.d
    psi = state.amplitudes.reshape((d,) * state.n)
    m = psi.transpose(keep + traced).reshape(d ** len(keep), d ** len(traced))
    return m @ m.conj().T


def is_ame_dense(g: Multigraph, tol: float = 1e-9) -> bool:
    """Literal AME check: every ceil(N/2)-site reduction maximally mixed."""
    _check_size(g.d, g.n)
    state = graph_state(g)
    half = ceil(g.n / 2)
    target_dim = g.d ** (g.n - half)
    target = np.eye(target_dim) / g.d ** (g.n // 2)
    for q in combinations(range(1, g.n + 1), half):
        rho = partial_trace(state, q)
        if np.max(np.abs(rho - target)) > tol:
            return False
    return True
