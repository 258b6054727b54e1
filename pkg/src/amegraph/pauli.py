"""Phaseless symplectic representation of generalized Pauli strings.

An operator X^{x_1}Z^{z_1} x ... x X^{x_N}Z^{z_N} is stored as the exponent
pair (x, z) in Z_d^N x Z_d^N, with the global phase deliberately dropped:
the trace of a single-site factor X^a Z^b vanishes unless a = b = 0
regardless of any scalar prefactor, so entanglement checks and weights never
depend on it. Stabilizer elements of a graph state are indexed by exponent
vectors alpha, with S(alpha) = prod_i g_i^{alpha_i} carrying x = alpha and
z = adjacency * alpha (mod d).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Multigraph


@dataclass(frozen=True)
class SymplecticPauli:
    """Exponent vectors of a generalized Pauli string, phase discarded."""

    d: int
    x: tuple[int, ...]
    z: tuple[int, ...]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"local dimension must be >= 2, got {self.d}")
        if len(self.x) != len(self.z):
            raise ValueError("x and z exponent vectors must have equal length")
        if any(not 0 <= e < self.d for e in self.x + self.z):
            raise ValueError(f"exponents must lie in [0, {self.d})")

    @property
    def num_sites(self) -> int:
        return len(self.x)

    @property
    def is_identity(self) -> bool:
        return not any(self.x) and not any(self.z)

    @property
    def support(self) -> tuple[int, ...]:
        """1-based sites where the operator acts non-identically."""
        return tuple(i + 1 for i in range(len(self.x))
                     if self.x[i] or self.z[i])

    def weight(self) -> int:
        """Number of sites acted on non-identically."""
        return len(self.support)

    def __str__(self) -> str:
        return format_pauli(self)


def generator(g: Multigraph, i: int) -> SymplecticPauli:
    """Stabilizer generator of vertex i (1-based): X on site i, Z^Gamma_ij
    on every neighbor j."""
    if not 1 <= i <= g.n:
        raise ValueError(f"vertex {i} out of range [1, {g.n}]")
    x = tuple(1 if k == i - 1 else 0 for k in range(g.n))
    return SymplecticPauli(g.d, x, g.adjacency[i - 1])


def element(g: Multigraph, alpha) -> SymplecticPauli:
    """Stabilizer element with exponent vector alpha: x = alpha,
    z = Gamma * alpha (mod d).

    The generators commute up to phase, so exponents simply add site-wise;
    alpha entries are reduced mod d.
    """
    alpha = [int(a) for a in alpha]
    if len(alpha) != g.n:
        raise ValueError(f"exponent vector has length {len(alpha)}, expected {g.n}")
    d = g.d
    x = tuple(a % d for a in alpha)
    z = tuple(sum(row[i] * alpha[i] for i in range(g.n)) % d
              for row in g.adjacency)
    return SymplecticPauli(d, x, z)


def format_pauli(p: SymplecticPauli) -> str:
    """Human-readable rendering, e.g. "X1 Z2^3 X4 Z4^2"; identity is "I"."""
    parts = []
    for site in range(p.num_sites):
        a, b = p.x[site], p.z[site]
        if a:
            parts.append(f"X{site + 1}" + (f"^{a}" if a != 1 else ""))
        if b:
            parts.append(f"Z{site + 1}" + (f"^{b}" if b != 1 else ""))
    return " ".join(parts) if parts else "I"
