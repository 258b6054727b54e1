"""Exact integer and modular linear algebra for composite moduli.

Determinants are always computed over the integers (fraction-free Bareiss
elimination on arbitrary-precision ints) and reduced mod d afterwards;
elimination inside Z_d itself is unsound because composite d has zero
divisors. Kernel extraction over Z_d goes through the integer Smith normal
form U*M*V = S, which yields a complete description of the kernel even when
d is composite.
"""

from math import gcd


def _as_int_rows(matrix) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in matrix]
    if not rows or not rows[0]:
        raise ValueError("matrix must have at least one row and one column")
    ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise ValueError("ragged matrix")
    return rows


def det_int(matrix) -> int:
    """Exact determinant of a square integer matrix.

    Uses Bareiss fraction-free elimination; every intermediate value is an
    exact integer, so there is no overflow or rounding at any size.
    """
    m = _as_int_rows(matrix)
    n = len(m)
    if len(m[0]) != n:
        raise ValueError(f"determinant needs a square matrix, got {n}x{len(m[0])}")
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unit(x: int, d: int) -> bool:
    """True iff x is invertible mod d, i.e. gcd(x mod d, d) = 1."""
    if d < 2:
        raise ValueError(f"modulus must be >= 2, got {d}")
    return gcd(x % d, d) == 1


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _min_pivot(s, t, nrows, ncols):
    """Smallest-magnitude nonzero entry of the trailing submatrix, or None."""
    best = None
    for i in range(t, nrows):
        for j in range(t, ncols):
            v = s[i][j]
            if v != 0 and (best is None or abs(v) < abs(best[2])):
                best = (i, j, v)
    return best


def smith_normal_form(matrix):
    """Diagonalize an integer matrix by unimodular transforms.

    Returns (U, S, V) with U*M*V = S, S diagonal with s_i | s_{i+1} and
    nonnegative diagonal, and det U, det V in {+1, -1}. Works for any
    rectangular M; pivots are chosen smallest-magnitude-first, which keeps
    entry growth tame for the small systems handled here.
    """
    s = _as_int_rows(matrix)
    nrows, ncols = len(s), len(s[0])
    u = _identity(nrows)
    v = _identity(ncols)

    def swap_rows(a, b):
        s[a], s[b] = s[b], s[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a, b):
        for row in s:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]

    def add_row(src, dst, q):
        # row dst += q * row src
        for j in range(ncols):
            s[dst][j] += q * s[src][j]
        for j in range(nrows):
            u[dst][j] += q * u[src][j]

    def add_col(src, dst, q):
        for i in range(nrows):
            s[i][dst] += q * s[i][src]
        for i in range(ncols):
            v[i][dst] += q * v[i][src]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(nrows, ncols):
        found = _min_pivot(s, t, nrows, ncols)
        if found is None:
            break
        pi, pj, _ = found
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)

        # Clear row and column t; each reduction pass may reintroduce
        # entries, so loop until both are clean.
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    add_row(t, i, -q)
                    if s[i][t] != 0:
                        # remainder is smaller than the pivot: promote it
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, ncols):
                if s[t][j] != 0:
                    q = s[t][j] // s[t][t]
                    add_col(t, j, -q)
                    if s[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break

        # Divisibility fix: the pivot must divide the whole trailing block.
        offender = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if s[i][j] % s[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue  # redo reduction at the same t

        if s[t][t] < 0:
            negate_row(t)
        t += 1

    return u, s, v


def kernel_nonzero(matrix, d: int):
    """A nonzero kernel vector of a square matrix mod d, if one exists.

    Via U*M*V = S: each diagonal s_i with t_i = d / gcd(s_i, d) < d
    contributes the generator V*(t_i*e_i) mod d, since M*(V*t_i*e_i) =
    U^-1 * (t_i*s_i) * e_i = 0 (mod d). Returns the first nonzero generator
    in column order, or None when det(M) is a unit mod d (kernel trivial).
    """
    if d < 2:
        raise ValueError(f"modulus must be >= 2, got {d}")
    m = _as_int_rows(matrix)
    n = len(m)
    if len(m[0]) != n:
        raise ValueError(f"kernel extraction needs a square matrix, got {n}x{len(m[0])}")
    _, s, v = smith_normal_form(m)
    for i in range(n):
        t = d // gcd(s[i][i], d)
        if t < d:
            gen = tuple((v[r][i] * t) % d for r in range(n))
            if any(gen):
                return gen
    return None
