"""Shared oracle helpers for the test suite.

These deliberately retrace results through routes independent of the code
under test: recursive cofactor expansion for determinants, literal dense
matrix algebra for operator identities, and einsum-based partial traces.
"""

import numpy as np

from amegraph import Multigraph, generator, pauli_matrix
from amegraph._mixedradix import digit_block_cached
from amegraph.dense import clock_matrix, shift_matrix


def cofactor_det(m):
    """Recursive cofactor expansion along the first row."""
    n = len(m)
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j]
               * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(n))


def matmul_int(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def relabel(g: Multigraph, perm) -> Multigraph:
    """Apply a vertex permutation (perm[old] = new, 0-based) to a graph."""
    adj = [[0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        for j in range(g.n):
            adj[perm[i]][perm[j]] = g.adjacency[i][j]
    return Multigraph(g.n, g.d, tuple(tuple(row) for row in adj))


def generator_power_products(g: Multigraph) -> np.ndarray:
    """Dense products prod_i G_i^(alpha_i) for every exponent vector.

    Index m of the result encodes alpha in counting order with the first
    component fastest, matching the scan order used everywhere else.
    """
    d, n = g.d, g.n
    dim = d ** n
    prods = np.eye(dim, dtype=complex)[None]
    for i in range(1, n + 1):
        gi = pauli_matrix(generator(g, i))
        pows = np.stack([np.linalg.matrix_power(gi, a) for a in range(d)])
        prods = prods[:, None] @ pows[None, :]
        prods = prods.transpose(1, 0, 2, 3).reshape(-1, dim, dim)
    return prods


def element_matrices_batch(g: Multigraph) -> np.ndarray:
    """Dense matrices of every stabilizer element, batched over alpha.

    Entry m is the matrix of element(g, alpha_m) with alpha enumerated
    first-component-fastest; agrees entry-for-entry with
    pauli_matrix(element(g, alpha_m)) (see the cross-check test).
    """
    d, n = g.d, g.n
    alphas = digit_block_cached(n, d, 0, d ** n)
    zs = (alphas @ np.asarray(g.adjacency, dtype=np.int64)) % d
    x, z = shift_matrix(d), clock_matrix(d)
    xz = np.stack([
        np.stack([np.linalg.matrix_power(x, a) @ np.linalg.matrix_power(z, b)
                  for b in range(d)])
        for a in range(d)])
    t = xz[alphas[:, 0], zs[:, 0]]
    for s in range(1, n):
        f = xz[alphas[:, s], zs[:, s]]
        m, p = t.shape[0], t.shape[1]
        t = np.einsum("mij,mkl->mikjl", t, f).reshape(m, p * d, p * d)
    return t


def max_phase_deviation(batch_a: np.ndarray, batch_b: np.ndarray):
    """Per-item deviation of a from b after fixing the best global phase.

    Returns (deviations, phase_modulus_errors); both are per-item arrays.
    The phase is read off at b's largest entry.
    """
    m = batch_a.shape[0]
    fa = batch_a.reshape(m, -1)
    fb = batch_b.reshape(m, -1)
    rows = np.arange(m)
    idx = np.argmax(np.abs(fb), axis=1)
    phase = fa[rows, idx] / fb[rows, idx]
    dev = np.abs(fa - phase[:, None] * fb).max(axis=1)
    return dev, np.abs(np.abs(phase) - 1)


def operator_partial_trace(ops: np.ndarray, d: int, n: int, q) -> np.ndarray:
    """Literal partial trace over sites q of a batch of d^n x d^n operators."""
    qs = set(q)
    letters = "abcdefghijklmnop"
    row = [letters[s] for s in range(n)]
    col = [letters[s] if (s + 1) in qs else letters[n + s] for s in range(n)]
    out = [row[s] for s in range(n) if (s + 1) not in qs] + \
          [col[s] for s in range(n) if (s + 1) not in qs]
    sub = "z" + "".join(row) + "".join(col) + "->z" + "".join(out)
    t = ops.reshape((ops.shape[0],) + (d,) * (2 * n))
    keep = n - len(qs)
    return np.einsum(sub, t).reshape(ops.shape[0], d ** keep, d ** keep)
