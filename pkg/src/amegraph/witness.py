"""Constructive non-AME witness for N = 4k vertices and even local dimension.

For such graphs a stabilizer element of weight <= 2k always exists, supported
on sites {1, ..., 2k-1} plus a single extra site j >= 2k. Requiring the
element S = (prod_{i<2k} g_i^{alpha_i}) g_j^{alpha_j} to act trivially on
every remaining site r gives a square linear system over Z_d whose matrix
has rows indexed by those r and columns by the free exponents. Writing
Delta_j for its integer determinant, the alternating sum
sum_{j=2k}^{4k} (-1)^j Delta_j vanishes identically (each adjacency entry
enters twice with opposite signs via the Laplace expansion along the last
column). The sum has k+1 terms of one sign and k of the other, so for even d
the Delta_j cannot all be odd, hence cannot all be units mod d: some system
has a nontrivial kernel, and any nonzero kernel vector assembles into an
exponent vector whose element has weight <= 2k = N/2, refuting the AME
property.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .graphs import Multigraph
from .pauli import SymplecticPauli, element
from .zdlinalg import det_int, is_unit, kernel_nonzero


class TheoremContradictionError(RuntimeError):
    """No non-unit determinant found where one is guaranteed (signals a bug)."""


class InvariantViolationError(RuntimeError):
    """A quantity that is identically constrained came out wrong (signals a bug)."""


@dataclass(frozen=True)
class WitnessReport:
    """Everything needed to audit one extracted witness."""

    k: int
    chosen_j: int
    deltas: dict[int, int]
    kernel: tuple[int, ...]
    alpha: tuple[int, ...]
    witness: SymplecticPauli
    witness_weight: int


def _four_k(g: Multigraph) -> int:
    if g.n % 4 != 0:
        raise ValueError(f"vertex count {g.n} is not divisible by 4")
    return g.n // 4


def build_system(g: Multigraph, j: int) -> list[list[int]]:
    """The 2k x 2k integer matrix of trivial-action constraints for site j.

    Rows run over r in {2k, ..., 4k} \\ {j} in increasing order; columns
    1..2k-1 hold Gamma_{i,r} for the exponents alpha_1..alpha_{2k-1} and the
    last column holds Gamma_{j,r}. Entries are the adjacency residues lifted
    to {0, ..., d-1} in Z.
    """
    k = _four_k(g)
    if not 2 * k <= j <= 4 * k:
        raise ValueError(f"column site {j} outside [{2 * k}, {4 * k}]")
    adj = g.adjacency
    rows = [r for r in range(2 * k, 4 * k + 1) if r != j]
    return [[adj[i - 1][r - 1] for i in range(1, 2 * k)] + [adj[j - 1][r - 1]]
            for r in rows]


def deltas(g: Multigraph) -> dict[int, int]:
    """Exact integer determinants Delta_j for every j in {2k, ..., 4k}."""
    k = _four_k(g)
    return {j: det_int(build_system(g, j)) for j in range(2 * k, 4 * k + 1)}


def signed_delta_sum(g: Multigraph) -> int:
    """sum_{j=2k}^{4k} (-1)^j Delta_j, which is identically zero.

    Returns the (zero) value; a nonzero result can only come from an
    implementation bug and raises InvariantViolationError.
    """
    total = sum((-1) ** j * delta for j, delta in deltas(g).items())
    if total != 0:
        raise InvariantViolationError(
            f"alternating determinant sum is {total}, expected 0")
    return total


def extract_witness(g: Multigraph) -> WitnessReport:
    """Produce a verified stabilizer element of weight <= N/2.

    Requires N = 4k and even d. Scans j = 2k..4k in increasing order for the
    first Delta_j that is not a unit mod d (the alternating-sum parity
    argument guarantees one for even d), pulls a nonzero kernel vector of
    that system, and assembles the exponent vector: kernel components
    1..2k-1 become alpha_1..alpha_{2k-1}, the last component becomes
    alpha_j, all other positions are zero. All report invariants are checked
    before returning.
    """
    k = _four_k(g)
    if g.d % 2 != 0:
        raise ValueError(f"local dimension {g.d} is odd; no witness is guaranteed")
    delta_map = deltas(g)
    chosen_j = next((j for j in range(2 * k, 4 * k + 1)
                     if not is_unit(delta_map[j], g.d)), None)
    if chosen_j is None:
        raise TheoremContradictionError(
            f"all determinants are units mod {g.d}: {delta_map}")
    kernel = kernel_nonzero(build_system(g, chosen_j), g.d)
    if kernel is None:
        raise InvariantViolationError(
            f"non-unit determinant {delta_map[chosen_j]} mod {g.d} "
            "yielded no kernel vector")

    alpha = [0] * g.n
    for i in range(1, 2 * k):
        alpha[i - 1] = kernel[i - 1]
    alpha[chosen_j - 1] = kernel[2 * k - 1]
    alpha = tuple(alpha)
    if not any(alpha):
        raise InvariantViolationError("assembled exponent vector is zero")

    witness = element(g, alpha)
    weight = witness.weight()
    allowed = set(range(1, 2 * k)) | {chosen_j}
    if not set(witness.support) <= allowed:
        raise InvariantViolationError(
            f"witness support {witness.support} leaks outside {sorted(allowed)}")
    if any(witness.z[r - 1] % g.d != 0
           for r in range(1, g.n + 1) if r not in allowed):
        raise InvariantViolationError("witness acts on a constrained site")
    if weight > 2 * k:
        raise InvariantViolationError(
            f"witness weight {weight} exceeds {2 * k}")
    if gcd(delta_map[chosen_j] % g.d, g.d) <= 1:
        raise InvariantViolationError("chosen determinant is a unit after all")

    return WitnessReport(k, chosen_j, delta_map, kernel, alpha, witness, weight)
