"""Igusa-Clebsch invariants of genus-2 curves.

Two independent computation paths: closed-form polynomials in the elementary
symmetric functions of (a, b, c) for the standard pentic model
y^2 = x(x-1)(x-a)(x-b)(x-c), and the partition sums over an arbitrary sextic
root list.  A root at infinity is handled by Moebius transport plus the
covariance law I_d(g.f) = det(g)^(-3d) I_d(f).
"""

from __future__ import annotations

import json
from importlib import resources
from itertools import permutations

from .formula import eval_formula, parse_formula
from .rationals import QQ, is_square_rat


def _load():
    with resources.files("kummer.data").joinpath("igusa.json").open() as f:
        raw = json.load(f)
    vs_sigma = ("s1", "s2", "s3")
    vs_abc = ("a", "b", "c")
    return {
        "I2": (parse_formula(raw["I2_sigma"], vs_sigma), vs_sigma),
        "I4": (parse_formula(raw["I4_sigma"], vs_sigma), vs_sigma),
        "I6": (parse_formula(raw["I6_sigma"], vs_sigma), vs_sigma),
        "I10": (parse_formula(raw["I10_abc"], vs_abc), vs_abc),
        "I5": (parse_formula(raw["I5_abc"], vs_abc), vs_abc),
    }


_FORMULAS = None


def _formulas():
    global _FORMULAS
    if _FORMULAS is None:
        _FORMULAS = _load()
    return _FORMULAS


class ICInvariants:
    def __init__(self, i2, i4, i6, i10, i5=None):
        self.I2 = i2
        self.I4 = i4
        self.I6 = i6
        self.I10 = i10
        self.I5 = i5
        if i10 == 0:
            raise ValueError("I10 = 0: the curve is not of genus 2")
        if i5 is not None and i5 * i5 != i10:
            raise ValueError("I5^2 must equal I10")

    def as_env(self) -> dict:
        env = {"I2": self.I2, "I4": self.I4, "I6": self.I6, "I10": self.I10}
        if self.I5 is not None:
            env["I5"] = self.I5
        return env

    def normalized(self):
        """(alpha, beta, gamma, mu) with the standard normalizations."""
        if self.I2 == 0:
            raise ValueError("normalization requires I2 != 0")
        alpha = self.I2**3 * self.I4 / self.I10
        beta = self.I2**2 * self.I6 / self.I10
        gamma = self.I2**5 / self.I10
        mu = None if self.I5 is None else self.I5 / self.I2**2
        return alpha, beta, gamma, mu

    def __repr__(self):
        return f"IC(I2={self.I2}, I4={self.I4}, I6={self.I6}, I10={self.I10}, I5={self.I5})"


def ic_from_sigma(a, b, c) -> ICInvariants:
    """Closed-form invariants of y^2 = x(x-1)(x-a)(x-b)(x-c)."""
    a, b, c = QQ(a), QQ(b), QQ(c)
    if len({a, b, c, QQ(0), QQ(1)}) != 5:
        raise ValueError("parameters must be distinct and avoid 0, 1")
    s1, s2, s3 = a + b + c, a * b + b * c + c * a, a * b * c
    fs = _formulas()
    env_s = {"s1": s1, "s2": s2, "s3": s3}
    env_abc = {"a": a, "b": b, "c": c}
    return ICInvariants(
        eval_formula(fs["I2"][0], env_s),
        eval_formula(fs["I4"][0], env_s),
        eval_formula(fs["I6"][0], env_s),
        eval_formula(fs["I10"][0], env_abc),
        eval_formula(fs["I5"][0], env_abc),
    )


OO = "oo"  # a root at infinity


def ic_from_roots(roots, leading=QQ(1)) -> ICInvariants:
    """Partition-sum invariants of f = leading * prod (x - r_i), 6 roots in P^1.

    At most one root may be 'oo' (then f is the quintic with the remaining
    roots); the value is obtained by moving all roots into the affine line
    with a Moebius map and rescaling by the covariance law.
    """
    roots = [r if r == OO else QQ(r) for r in roots]
    if len(roots) != 6 or len(set(map(str, roots))) != 6:
        raise ValueError("need six distinct roots in P^1")
    if OO in roots:
        finite = [r for r in roots if r != OO]
        # apply x -> 1/(x - s) with s rational, all roots move to finite values
        s = QQ(0)
        while any(r == s for r in finite):
            s += 1
        new_roots = [QQ(1) / (r - s) for r in finite] + [QQ(0)]
        # g^-1 = [[s, 1], [1, 0]]: x -> (s x + 1)/x sends new roots back
        # f(x) = lead * prod(x - r): (g.f)(x) = f((sx+1)/x) x^6
        # det(g) for g^-1 = [[s,1],[1,0]] is -1... use covariance directly:
        new_leading = leading * _transport_leading(finite, s)
        inv = _ic_finite(new_roots, new_leading)
        # I_d(g.f) = det(g)^(-3d) I_d(f) with det = -1: even powers: unchanged
        # for d in {2,4,6,10}; I5 transforms by det^(-15) = -1
        return ICInvariants(inv.I2, inv.I4, inv.I6, inv.I10, None)
    return _ic_finite(roots, leading)


def _transport_leading(finite_roots, s):
    """Leading coefficient of x^6 f((s x + 1)/x) for the quintic f."""
    # f = prod (u - r) over finite roots, u = (s x + 1)/x:
    # u - r = ((s - r) x + 1)/x, product over 5 roots, times x^6 -> leading
    # coefficient in x is x * prod((s - r) x + 1) -> lead = prod (s - r)
    out = QQ(1)
    for r in finite_roots:
        out *= s - r
    return out


def _ic_finite(roots, leading) -> ICInvariants:
    r = roots
    f6 = leading

    def d2(i, j):
        return (r[i] - r[j]) ** 2

    idx = range(6)
    i2 = QQ(0)
    for p in _partitions_into_pairs():
        (i, j), (k, l), (m, n) = p
        i2 += d2(i, j) * d2(k, l) * d2(m, n)
    i2 *= f6**2

    i4 = QQ(0)
    for tri1, tri2 in _partitions_into_triples():
        (i, j, k), (l, m, n) = tri1, tri2
        i4 += (
            d2(i, j) * d2(j, k) * d2(k, i) * d2(l, m) * d2(m, n) * d2(n, l)
        )
    i4 *= f6**4

    i6 = QQ(0)
    for tri1, tri2 in _partitions_into_triples():
        (i, j, k) = tri1
        for (l, m, n) in permutations(tri2):
            i6 += (
                d2(i, j) * d2(j, k) * d2(k, i)
                * d2(l, m) * d2(m, n) * d2(n, l)
                * d2(i, l) * d2(j, m) * d2(k, n)
            )
    i6 *= f6**6

    i10 = QQ(1)
    for i in idx:
        for j in idx:
            if i < j:
                i10 *= d2(i, j)
    i10 *= f6**10
    i5 = None
    return ICInvariants(i2, i4, i6, i10, i5)


def _partitions_into_pairs():
    """The 15 partitions of {0..5} into three unordered pairs."""
    out = []

    def rec(rest, acc):
        if not rest:
            out.append(tuple(acc))
            return
        first = rest[0]
        for k in range(1, len(rest)):
            pair = (first, rest[k])
            rec([x for x in rest[1:] if x != rest[k]], acc + [pair])

    rec(list(range(6)), [])
    return out


def _partitions_into_triples():
    """The 10 partitions of {0..5} into two unordered triples."""
    from itertools import combinations

    out = []
    for tri in combinations(range(1, 6), 2):
        first = (0,) + tri
        second = tuple(sorted(set(range(6)) - set(first)))
        out.append((first, second))
    return out


def ic_with_signed_root_order(a, b, c) -> ICInvariants:
    """Invariants with I5 fixed by the canonical root order (0, 1, a, b, c, oo)."""
    return ic_from_sigma(a, b, c)


def covariance_check(roots, leading, g) -> bool:
    """I_d(g.f) = det(g)^(-3d) I_d(f) for d in {2, 4, 6, 10} (finite case)."""
    inv = ic_from_roots(roots, leading)
    (ga, gb), (gc, gd) = [[QQ(v) for v in row] for row in g]
    det_inv = ga * gd - gb * gc
    new_roots = []
    lead_factor = QQ(1)
    for r in roots:
        if r == OO:
            raise ValueError("covariance check uses finite root lists")
        num = gb - gd * QQ(r)
        den = gc * QQ(r) - ga
        if den == 0:
            raise ValueError("transformed root at infinity; choose another g")
        new_roots.append(num / den)
        lead_factor *= -den
    inv2 = ic_from_roots(new_roots, QQ(leading) * lead_factor)
    detg = 1 / det_inv
    return (
        inv2.I2 == detg ** (-6) * inv.I2
        and inv2.I4 == detg ** (-12) * inv.I4
        and inv2.I6 == detg ** (-18) * inv.I6
        and inv2.I10 == detg ** (-30) * inv.I10
    )
