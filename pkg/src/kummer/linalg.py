"""Exact dense linear algebra over QQ and ZZ.

Matrices are lists of row lists.  Rational routines (rref, solve, kernel,
inverse, det) keep everything in QQ; integer routines (HNF, SNF) return
unimodular transforms so that the factorizations can be asserted exactly.
"""

from __future__ import annotations

from .rationals import QQ


def mat(rows):
    return [[QQ(x) for x in row] for row in rows]


def identity(n: int):
    return [[QQ(1) if i == j else QQ(0) for j in range(n)] for i in range(n)]

def zeros(m: int, n: int):
    return [[QQ(0)] * n for _ in range(m)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = transpose(b)
    return [[sum((a[i][s] * bt[j][s] for s in range(k)), QQ(0)) for j in range(m)] for i in range(n)]


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v))), QQ(0)) for row in a]


def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def mat_neg(a):
    return [[-x for x in row] for row in a]


def rref(a):
    """Reduced row echelon form; returns (R, pivot column list)."""
    r = [row[:] for row in a]
    m = len(r)
    n = len(r[0]) if m else 0
    pivots = []
    row = 0
    for col in range(n):
        sel = None
        for i in range(row, m):
            if r[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        r[row], r[sel] = r[sel], r[row]
        inv = QQ(1) / r[row][col]
        r[row] = [x * inv for x in r[row]]
        for i in range(m):
            if i != row and r[i][col] != 0:
                f = r[i][col]
                r[i] = [x - f * y for x, y in zip(r[i], r[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return r, pivots


def rank(a) -> int:
    return len(rref(a)[1])


def kernel_basis(a):
    """Basis of the right kernel {x : a x = 0}."""
    if not a:
        return []
    r, pivots = rref(a)
    n = len(a[0])
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [QQ(0)] * n
        v[j] = QQ(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][j]
        basis.append(v)
    return basis


def solve_linear(a, b):
    """Solve a x = b exactly.

    Returns (particular, kernel basis) or None when the system is
    inconsistent.  Never raises on inconsistency.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    aug = [list(row) + [QQ(b[i])] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    for i in range(len(pivots)):
        if pivots[i] == n:
            return None  # pivot in the constant column: inconsistent
    x = [QQ(0)] * n
    for i, p in enumerate(pivots):
        x[p] = r[i][n]
    return x, kernel_basis(a)


def inverse(a):
    n = len(a)
    aug = [list(row) + idrow for row, idrow in zip(a, identity(n))]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def det(a):
    """Determinant by fraction-free-ish Gaussian elimination over QQ."""
    n = len(a)
    m = [row[:] for row in a]
    d = QQ(1)
    for col in range(n):
        sel = None
        for i in range(col, n):
            if m[i][col] != 0:
                sel = i
                break
        if sel is None:
            return QQ(0)
        if sel != col:
            m[col], m[sel] = m[sel], m[col]
            d = -d
        d = d * m[col][col]
        inv = QQ(1) / m[col][col]
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return d


# -- integer normal forms ----------------------------------------------------


def hnf_row(a):
    """Row Hermite normal form over ZZ: returns (H, U) with U a = H, det U = +-1.

    H is upper echelon with positive pivots and entries above a pivot reduced
    to [0, pivot).
    """
    h = [[int(x) for x in row] for row in a]
    m = len(h)
    n = len(h[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    row = 0
    for col in range(n):
        # find pivot: repeatedly reduce entries in this column below `row`
        while True:
            nz = [i for i in range(row, m) if h[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(h[i][col]))
            if i0 != row:
                h[row], h[i0] = h[i0], h[row]
                u[row], u[i0] = u[i0], u[row]
            done = True
            for i in range(row + 1, m):
                if h[i][col] != 0:
                    q = h[i][col] // h[row][col]
                    h[i] = [x - q * y for x, y in zip(h[i], h[row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[row])]
                    if h[i][col] != 0:
                        done = False
            if done:
                break
        if row < m and h[row][col] != 0:
            if h[row][col] < 0:
                h[row] = [-x for x in h[row]]
                u[row] = [-x for x in u[row]]
            p = h[row][col]
            for i in range(row):
                q = h[i][col] // p
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[row])]
            row += 1
            if row == m:
                break
    return h, u


def smith_normal_form(a):
    """Smith normal form over ZZ: returns (U, D, V) with U a V = D,
    D diagonal with d_i | d_{i+1}, U and V unimodular."""
    d = [[int(x) for x in row] for row in a]
    m = len(d)
    n = len(d[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q*row_j
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q*col_j
        for r in range(m):
            d[r][i] -= q * d[r][j]
        for r in range(n):
            v[r][i] -= q * v[r][j]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in range(m):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    s = 0
    while s < min(m, n):
        # locate a nonzero entry of minimal magnitude in the trailing block
        best = None
        for i in range(s, m):
            for j in range(s, n):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        if i0 != s:
            row_swap(s, i0)
        if j0 != s:
            col_swap(s, j0)
        clean = True
        for i in range(s + 1, m):
            if d[i][s] != 0:
                row_op(i, s, d[i][s] // d[s][s])
                if d[i][s] != 0:
                    clean = False
        for j in range(s + 1, n):
            if d[s][j] != 0:
                col_op(j, s, d[s][j] // d[s][s])
                if d[s][j] != 0:
                    clean = False
        if not clean:
            continue
        # divisibility: fold in any entry the pivot does not divide
        bad = None
        for i in range(s + 1, m):
            for j in range(s + 1, n):
                if d[i][j] % d[s][s] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(s, bad, -1)  # add row `bad` into pivot row
            continue
        if d[s][s] < 0:
            d[s] = [-x for x in d[s]]
            u[s] = [-x for x in u[s]]
        s += 1
    return u, d, v


def elementary_divisors(a):
    """Nonzero diagonal entries of the SNF, in divisibility order."""
    _, d, _ = smith_normal_form(a)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i] != 0:
            out.append(abs(d[i][i]))
    return out


def det_int(a) -> int:
    from math import prod

    n = len(a)
    val = det([[QQ(x) for x in row] for row in a])
    assert val.denominator == 1
    return int(val)
