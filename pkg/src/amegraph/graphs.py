"""Multigraph model: adjacency over Z_d, construction, enumeration, I/O.

Edge multiplicities are stored reduced mod d, since a multiplicity of d acts
trivially on everything downstream. Vertices are 1-based in all public
interfaces and file formats; the adjacency matrix itself is indexed 0-based.

Two file formats are accepted, sniffed by the leading character:

* JSON: ``{"n": 4, "d": 2, "adjacency": [[0,1,...], ...]}`` with a full
  symmetric matrix, zero diagonal, entries already in [0, d).
* edge list: first line ``n d``, then one ``i j multiplicity`` line per edge.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from ._mixedradix import digits_of


class GraphFormatError(ValueError):
    """Raised for malformed or invalid graph descriptions."""


@dataclass(frozen=True)
class Multigraph:
    """Undirected loop-free multigraph with adjacency entries in [0, d)."""

    n: int
    d: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError(f"vertex count must be >= 1, got {self.n}")
        if self.d < 2:
            raise GraphFormatError(f"local dimension must be >= 2, got {self.d}")
        adj = self.adjacency
        if len(adj) != self.n or any(len(row) != self.n for row in adj):
            raise GraphFormatError(f"adjacency must be {self.n}x{self.n}")
        for i in range(self.n):
            if adj[i][i] != 0:
                raise GraphFormatError(f"nonzero diagonal entry at vertex {i + 1}")
            for j in range(self.n):
                if not 0 <= adj[i][j] < self.d:
                    raise GraphFormatError(
                        f"adjacency entry {adj[i][j]} at ({i + 1},{j + 1}) "
                        f"outside [0, {self.d})")
                if adj[i][j] != adj[j][i]:
                    raise GraphFormatError(
                        f"adjacency not symmetric at ({i + 1},{j + 1})")

    @property
    def num_cells(self) -> int:
        """Number of free upper-triangle entries."""
        return self.n * (self.n - 1) // 2


def _cells(n: int) -> list[tuple[int, int]]:
    """Upper-triangle cell order: (0,1), (0,2), ..., (n-2,n-1)."""
    return list(combinations(range(n), 2))


def _from_cell_values(n: int, d: int, values) -> Multigraph:
    adj = [[0] * n for _ in range(n)]
    for (i, j), v in zip(_cells(n), values):
        adj[i][j] = adj[j][i] = v
    return Multigraph(n, d, tuple(tuple(row) for row in adj))


def from_edge_list(n: int, d: int, edges) -> Multigraph:
    """Build a multigraph from (i, j, multiplicity) triples, vertices 1-based.

    Multiplicities accumulate and are reduced mod d; in particular d parallel
    edges cancel to no edge at all.
    """
    if n < 1:
        raise GraphFormatError(f"vertex count must be >= 1, got {n}")
    if d < 2:
        raise GraphFormatError(f"local dimension must be >= 2, got {d}")
    adj = [[0] * n for _ in range(n)]
    for i, j, mult in edges:
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphFormatError(f"vertex index out of range in edge ({i},{j})")
        if i == j:
            raise GraphFormatError(f"self-loop at vertex {i}")
        if mult < 0:
            raise GraphFormatError(f"negative multiplicity {mult} on edge ({i},{j})")
        adj[i - 1][j - 1] = (adj[i - 1][j - 1] + mult) % d
        adj[j - 1][i - 1] = adj[i - 1][j - 1]
    return Multigraph(n, d, tuple(tuple(row) for row in adj))


def graph_count(n: int, d: int) -> int:
    """Number of labeled multigraphs on n vertices with entries in [0, d)."""
    return d ** (n * (n - 1) // 2)


def graph_from_index(n: int, d: int, index: int) -> Multigraph:
    """The index-th graph in enumeration order.

    The upper-triangle cells (1,2), (1,3), ..., (n-1,n) are the mixed-radix
    digits of the index, first cell fastest. This gives a fixed bijection
    [0, d^(n(n-1)/2)) -> graphs that sweep workers use to split ranges.
    """
    total = graph_count(n, d)
    if not 0 <= index < total:
        raise ValueError(f"graph index {index} outside [0, {total})")
    return _from_cell_values(n, d, digits_of(index, n * (n - 1) // 2, d))


def enumerate_graphs(n: int, d: int) -> Iterator[Multigraph]:
    """All labeled multigraphs on n vertices, in index order, each once."""
    if n < 1 or d < 2:
        raise GraphFormatError(f"invalid parameters n={n}, d={d}")
    for index in range(graph_count(n, d)):
        yield graph_from_index(n, d, index)


def random_graph(n: int, d: int, seed: int) -> Multigraph:
    """Uniform random graph with independent upper-triangle entries.

    Deterministic: the same (n, d, seed) always yields the same graph.
    """
    rng = random.Random(seed)
    return _from_cell_values(n, d, [rng.randrange(d) for _ in range(n * (n - 1) // 2)])


def serialize_graph(g: Multigraph) -> str:
    """JSON document for a graph; inverse of parse_graph."""
    return json.dumps(
        {"n": g.n, "d": g.d, "adjacency": [list(row) for row in g.adjacency]})


def _parse_json(text: str) -> Multigraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    for key in ("n", "d", "adjacency"):
        if key not in doc:
            raise GraphFormatError(f"missing key {key!r}")
    n, d, adj = doc["n"], doc["d"], doc["adjacency"]
    if not isinstance(n, int) or not isinstance(d, int):
        raise GraphFormatError("n and d must be integers")
    if not isinstance(adj, list) or any(not isinstance(row, list) for row in adj):
        raise GraphFormatError("adjacency must be a list of lists")
    try:
        rows = tuple(tuple(int(x) for x in row) for row in adj)
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(f"non-integer adjacency entry: {exc}") from exc
    return Multigraph(n, d, rows)


def _parse_edge_list(text: str) -> Multigraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge-list document")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFormatError(f"edge-list header must be 'n d', got {lines[0]!r}")
    try:
        n, d = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphFormatError(f"non-integer header: {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise GraphFormatError(f"edge line must be 'i j multiplicity', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1]), int(parts[2])))
        except ValueError as exc:
            raise GraphFormatError(f"non-integer edge line: {ln!r}") from exc
    return from_edge_list(n, d, edges)


def parse_graph(text: str) -> Multigraph:
    """Parse a graph document, sniffing JSON vs edge-list format."""
    stripped = text.lstrip()
    if not stripped:
        raise GraphFormatError("empty graph document")
    if stripped[0] == "{":
        return _parse_json(text)
    return _parse_edge_list(text)


def load_graph(path) -> Multigraph:
    """Read and parse a graph file."""
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
