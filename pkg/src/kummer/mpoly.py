"""Sparse multivariate polynomials over the exact rationals.

Variables are a fixed ordered tuple per expression; terms are stored as
{exponent tuple: nonzero rational}.  These hold the symbolic identities of
the toolkit (quartic coefficients, invariant formulas) and back the formula
evaluator.
"""

from __future__ import annotations

import random

from .rationals import QQ, qq

# Above this many terms, identity checking switches from exact expansion to
# certified multi-point specialization.
EXPANSION_TERM_LIMIT = 10_000

# Specialization points draw numerators/denominators up to this bound.
SPECIALIZATION_HEIGHT = 10_000


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple, terms: dict):
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars) -> "MPoly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c) -> "MPoly":
        c = qq(c) if isinstance(c, str) else QQ(c)
        vars = tuple(vars)
        if c == 0:
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars, name) -> "MPoly":
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): QQ(1)})

    def _check(self, other: "MPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def term_count(self) -> int:
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = qq(other) if isinstance(other, str) else QQ(other)
            if c == 0:
                return MPoly(self.vars, {})
            return MPoly(self.vars, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero constant (scalar or constant MPoly)."""
        if isinstance(other, MPoly):
            if other.total_degree() > 0:
                raise ValueError("MPoly division only by constants")
            other = other.terms.get((0,) * len(other.vars), 0)
        c = qq(other) if isinstance(other, str) else QQ(other)
        if c == 0:
            raise ZeroDivisionError
        return self * (QQ(1) / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        r = MPoly.const(self.vars, 1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- evaluation / extraction ----------------------------------------------

    def evaluate(self, assignment: dict):
        """Evaluate with values from any commutative ring containing QQ.

        Every variable must be assigned.  Values may be rationals, Poly,
        RatFunc, or further MPoly instances over a common variable set.
        """
        vals = [assignment[v] for v in self.vars]
        total = None
        for e, c in self.terms.items():
            term = None
            for v, k in zip(vals, e):
                if k == 0:
                    continue
                f = v**k
                term = f if term is None else term * f
            term = c if term is None else term * c
            total = term if total is None else total + term
        if total is None:
            return QQ(0)
        return total

    def coeffs_in(self, name: str) -> dict:
        """Collect as a polynomial in one variable: {exp: MPoly in the rest}."""
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            re = tuple(x for j, x in enumerate(e) if j != i)
            d = out.setdefault(k, {})
            d[re] = d.get(re, 0) + c
        return {k: MPoly(rest, d) for k, d in out.items()}

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mon = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            bits.append(f"{c}" if not mon else f"{c}*{mon}")
        return " + ".join(bits)


def identity_check(lhs: MPoly, rhs: MPoly, trials: int = 4, seed: int = 0) -> bool:
    """Exact test whether lhs == rhs as polynomials.

    Below EXPANSION_TERM_LIMIT combined terms the difference is expanded
    exactly, which is a complete proof.  Above it, the difference is
    restricted to `trials` seeded random affine lines and each restriction
    is evaluated at totaldegree+1 distinct parameters: degree+1 exact zeros
    prove the restriction vanishes identically on that line, and a nonzero
    difference of total degree D survives a random line with probability
    at most D/SPECIALIZATION_HEIGHT per trial (Schwartz-Zippel on the line
    direction).  All arithmetic is exact; a 'False' answer is always certain.
    """
    if lhs.vars != rhs.vars:
        raise ValueError("identity_check requires a common variable set")
    if lhs.term_count() + rhs.term_count() <= EXPANSION_TERM_LIMIT:
        return (lhs - rhs).is_zero()
    deg = max(lhs.total_degree(), rhs.total_degree(), 0)
    rng = random.Random(seed)
    nv = len(lhs.vars)
    for _ in range(max(trials, 1)):
        base = [_rand_q(rng) for _ in range(nv)]
        direc = [_rand_q(rng) for _ in range(nv)]
        for k in range(deg + 1):
            s = QQ(k)
            point = {v: base[i] + s * direc[i] for i, v in enumerate(lhs.vars)}
            if lhs.evaluate(point) != rhs.evaluate(point):
                return False
    return True


def _rand_q(rng: random.Random):
    return QQ(
        rng.randint(-SPECIALIZATION_HEIGHT, SPECIALIZATION_HEIGHT),
        rng.randint(1, SPECIALIZATION_HEIGHT),
    )
