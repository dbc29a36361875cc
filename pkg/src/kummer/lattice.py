"""Lattices presented by Gram matrices.

Covers duals and scalings, discriminant groups via Smith normal form, the
root-lattice catalog (A, D, E and the P family with 3's on the diagonal and
1's off it), exact short-vector enumeration, and a backtracking isometry
test for positive definite lattices of rank at most 8.
"""

from __future__ import annotations

import math
import re

from .linalg import det, elementary_divisors, inverse, mat, mat_mul, transpose
from .rationals import QQ, qq


class GramLattice:
    def __init__(self, gram, name: str | None = None):
        gram = mat(gram)
        n = len(gram)
        for row in gram:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        self.gram = gram
        self.rank = n
        self.name = name

    def det(self):
        return det(self.gram)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    def is_positive_definite(self) -> bool:
        # leading principal minors all positive
        for k in range(1, self.rank + 1):
            sub = [row[:k] for row in self.gram[:k]]
            if det(sub) <= 0:
                return False
        return True

    def norm(self, v):
        g = self.gram
        n = self.rank
        return sum((v[i] * g[i][j] * v[j] for i in range(n) for j in range(n)), QQ(0))

    def pair(self, v, w):
        g = self.gram
        n = self.rank
        return sum((v[i] * g[i][j] * w[j] for i in range(n) for j in range(n)), QQ(0))

    def direct_sum(self, other: "GramLattice") -> "GramLattice":
        n, m = self.rank, other.rank
        g = [[QQ(0)] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                g[i][j] = self.gram[i][j]
        for i in range(m):
            for j in range(m):
                g[n + i][n + j] = other.gram[i][j]
        return GramLattice(g)

    def __repr__(self):
        return f"GramLattice(rank={self.rank}, name={self.name!r})"


def dual_lattice(L: GramLattice) -> GramLattice:
    if L.det() == 0:
        raise ValueError("dual of a singular lattice")
    return GramLattice(inverse(L.gram), name=None if L.name is None else L.name + "*")


def scale_lattice(L: GramLattice, lam) -> GramLattice:
    lam = qq(lam) if isinstance(lam, str) else QQ(lam)
    return GramLattice([[x * lam for x in row] for row in L.gram])


def dual_and_scale(L: GramLattice, lam) -> GramLattice:
    """Dual followed by scaling: M*[lam]."""
    return scale_lattice(dual_lattice(L), lam)


def disc_group(L: GramLattice):
    """Invariant factors (> 1) of the discriminant group coker(gram)."""
    if not L.is_integral():
        raise ValueError("discriminant group needs an integral Gram matrix")
    if L.det() == 0:
        raise ValueError("singular Gram matrix")
    divs = elementary_divisors([[int(x) for x in row] for row in L.gram])
    return [d for d in divs if d != 1]


# -- root lattice catalog ----------------------------------------------------


def root_lattice(kind: str, n: int) -> GramLattice:
    kind = kind.upper()
    if kind == "A" and n >= 1:
        g = _path_gram(n)
    elif kind == "D" and n >= 3:
        g = _path_gram(n)
        # D_n: fork at one end (nodes n-1 and n-2 both attach to n-3)
        g[n - 1][n - 2] = g[n - 2][n - 1] = QQ(0)
        if n >= 3:
            g[n - 1][n - 3] = g[n - 3][n - 1] = QQ(-1)
    elif kind == "E" and n in (6, 7, 8):
        g = _path_gram(n)
        # E_n: path on n-1 nodes with the last node attached to the third
        g[n - 1][n - 2] = g[n - 2][n - 1] = QQ(0)
        g[n - 1][2] = g[2][n - 1] = QQ(-1)
    elif kind == "P" and n >= 1:
        g = [[QQ(3) if i == j else QQ(1) for j in range(n)] for i in range(n)]
    else:
        raise ValueError(f"invalid root lattice {kind}_{n}")
    return GramLattice(g, name=f"{kind}{n}")


def _path_gram(n: int):
    g = [[QQ(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = QQ(2)
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = QQ(-1)
    return g


_SUMMAND = re.compile(
    r"^(?:<(?P<unit>[-0-9/]+)>|(?P<kind>[ADEP])(?P<rank>\d+)(?P<dual>\*)?)"
    r"(?:\[(?P<scale>[-0-9/]+)\])?$"
)


def lattice_from_name(name: str) -> GramLattice | None:
    """Parse names like 'A3*[2]', 'P2[1/2]', '(A4*+A1*)[2]', '<1>+<1>', '0'.

    Returns None for the zero lattice (name '0').
    """
    name = name.replace(" ", "")
    if name == "0":
        return None
    parts = _split_top(name)
    total = None
    for part in parts:
        L = _parse_summand(part)
        total = L if total is None else total.direct_sum(L)
    if total is not None:
        total.name = name
    return total


def _split_top(s: str):
    parts, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def _parse_summand(s: str) -> GramLattice:
    if s.startswith("("):
        close = s.rindex(")")
        inner = lattice_from_name(s[1:close])
        rest = s[close + 1 :]
        if rest:
            m = re.match(r"^\[([-0-9/]+)\]$", rest)
            if not m:
                raise ValueError(f"bad lattice name fragment {s!r}")
            return scale_lattice(inner, qq(m.group(1)))
        return inner
    m = _SUMMAND.match(s)
    if not m:
        raise ValueError(f"bad lattice name {s!r}")
    if m.group("unit") is not None:
        L = GramLattice([[qq(m.group("unit"))]])
    else:
        L = root_lattice(m.group("kind"), int(m.group("rank")))
        if m.group("dual"):
            L = dual_lattice(L)
    if m.group("scale"):
        L = scale_lattice(L, qq(m.group("scale")))
    return L


# -- short vectors -----------------------------------------------------------


def _ldl(gram):
    """G = U^T diag(d) U with U unit upper triangular (exact, positive definite)."""
    n = len(gram)
    g = [row[:] for row in gram]
    u = [[QQ(1) if i == j else QQ(0) for j in range(n)] for i in range(n)]
    d = [QQ(0)] * n
    for i in range(n):
        d[i] = g[i][i]
        if d[i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            u[i][j] = g[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                g[r][c] = g[r][c] - g[i][r] * g[i][c] / d[i]
                g[c][r] = g[r][c]
    return d, u


def _floor_sqrt_q(x) -> int:
    """floor(sqrt(x)) for nonnegative rational x."""
    if x < 0:
        raise ValueError
    num, den = int(x.numerator), int(x.denominator)
    return math.isqrt(num * den) // den


def _ceil_q(x) -> int:
    num, den = int(x.numerator), int(x.denominator)
    return -((-num) // den)


def short_vectors(L: GramLattice, bound):
    """All nonzero integer vectors with norm <= bound, one per +-pair.

    The representative has its first nonzero coordinate positive.  Exact
    branch-and-bound on the LDL decomposition; raises on indefinite input.
    """
    bound = qq(bound) if isinstance(bound, str) else QQ(bound)
    if not L.is_positive_definite():
        raise ValueError("short vector enumeration needs a positive definite lattice")
    n = L.rank
    d, u = _ldl(L.gram)
    out = []
    x = [0] * n

    def rec(i, remaining):
        if i < 0:
            if any(x):
                v = list(x)
                for c in v:
                    if c != 0:
                        if c < 0:
                            v = [-t for t in v]
                        break
                out.append((tuple(v), L.norm(v)))
            return
        # center of the i-th box: -sum_{j>i} u[i][j] x[j]
        center = -sum((u[i][j] * x[j] for j in range(i + 1, n)), QQ(0))
        radius2 = remaining / d[i]
        r = _floor_sqrt_q(radius2)
        lo = center - r - 1
        hi = center + r + 1
        k = _ceil_q(lo)
        while QQ(k) <= hi:
            t = QQ(k) - center
            used = d[i] * t * t
            if used <= remaining:
                x[i] = k
                rec(i - 1, remaining - used)
            k += 1
        x[i] = 0

    rec(n - 1, bound)
    # deduplicate +- pairs (sign normalization may collide only for equal vectors)
    seen = {}
    for v, nm in out:
        seen[v] = nm
    return sorted(seen.items(), key=lambda p: (p[1], p[0]))


def minimal_norm(L: GramLattice):
    """Smallest nonzero norm, by growing the search bound."""
    bound = min(L.gram[i][i] for i in range(L.rank))
    vs = short_vectors(L, bound)
    assert vs, "diagonal vector must appear"
    return min(nm for _, nm in vs)


# -- isometry ----------------------------------------------------------------


def is_isometric(L1: GramLattice, L2: GramLattice) -> bool:
    """Exact isometry test for positive definite lattices of rank <= 8.

    Searches for an integral basis change B with B^T G2 B = G1 by matching
    basis vectors of L1 to short vectors of L2, pruning on inner products.
    Rational Gram matrices are scaled to a common integral multiple first.
    """
    if L1.rank != L2.rank:
        return False
    if L1.rank > 8:
        raise ValueError("isometry test supports rank <= 8 only")
    if L1.rank == 0:
        return True
    if not (L1.is_positive_definite() and L2.is_positive_definite()):
        raise ValueError("isometry test needs positive definite lattices")
    if L1.det() != L2.det():
        return False
    scale = 1
    for L in (L1, L2):
        for row in L.gram:
            for xq in row:
                scale = scale * int(xq.denominator) // math.gcd(scale, int(xq.denominator))
    g1 = GramLattice([[x * scale for x in row] for row in L1.gram])
    g2 = GramLattice([[x * scale for x in row] for row in L2.gram])

    n = g1.rank
    norms_needed = [g1.gram[i][i] for i in range(n)]
    vs = short_vectors(g2, max(norms_needed))
    by_norm: dict = {}
    for v, nm in vs:
        by_norm.setdefault(nm, []).extend([v, tuple(-c for c in v)])

    # order targets by fewest candidates first
    order = sorted(range(n), key=lambda i: len(by_norm.get(norms_needed[i], [])))
    chosen = [None] * n

    def pairg2(v, w):
        return g2.pair(list(v), list(w))

    def rec(k):
        if k == n:
            b = transpose([list(chosen[order.index(i)]) for i in range(n)])
            # b columns are images of e_i; check determinant is +-1
            dv = det(mat(b))
            return abs(dv) == 1
        i = order[k]
        for cand in by_norm.get(norms_needed[i], []):
            ok = True
            for kk in range(k):
                j = order[kk]
                if pairg2(cand, chosen[kk]) != g1.gram[i][j]:
                    ok = False
                    break
            if ok:
                chosen[k] = cand
                if rec(k + 1):
                    return True
        return False

    return rec(0)
