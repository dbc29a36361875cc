"""Rational root extraction for exact polynomials over QQ.

Discovery is numeric (mpmath at high precision, deterministic settings);
every candidate is then verified by exact substitution and divided out
exactly, so the results carry no floating-point trust.  Roots that fail
exact verification are simply not reported; callers that require complete
accounting (fiber classification) cross-check degrees and Euler numbers.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .rationals import QQ, is_square_rat, sqrt_rat
from .upoly import Poly, poly_gcd

_DENOM_BOUNDS = (10**4, 10**9, 10**14)


def rational_roots(p: Poly):
    """All rational roots with multiplicity: list of (root, multiplicity).

    Also returns the rootless cofactor: (roots, residual) with
    p = lc * prod (t - r)^m * residual-ish (residual keeps its own content).
    """
    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    ring = p.ring
    roots = []
    work = p
    m0 = work.ord_at_zero()
    if m0:
        roots.append((QQ(0), m0))
        work = Poly(ring, work.coeffs[m0:])
    for r in _root_candidates(work):
        lin = ring.gen - ring.const(r)
        m = 0
        while True:
            q, rem = work.divmod(lin)
            if not rem.is_zero():
                break
            work = q
            m += 1
        if m:
            roots.append((r, m))
    roots.sort(key=lambda rm: (rm[0] != 0, rm[0]))
    return roots, work


def _root_candidates(p: Poly):
    """Candidate rational roots, exact-verified by the caller."""
    d = p.degree
    if d <= 0:
        return []
    out = []
    if d == 1:
        out.append(-p[0] / p[1])
        return out
    if d == 2:
        disc = p[1] * p[1] - 4 * p[2] * p[0]
        if is_square_rat(disc):
            rt = sqrt_rat(disc)
            out.extend([(-p[1] + rt) / (2 * p[2]), (-p[1] - rt) / (2 * p[2])])
        return out
    rad = (p / poly_gcd(p, p.derivative())).monic()
    if rad.degree <= 2:
        return _root_candidates(rad)
    return _numeric_candidates(rad)


def _numeric_candidates(p: Poly):
    with mpmath.workdps(70):
        coeffs = [_to_mpf(c) for c in reversed(p.coeffs)]
        try:
            rts = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
        except Exception:
            return []
        cands = set()
        for r in rts:
            if abs(mpmath.im(r)) > mpmath.mpf("1e-30"):
                continue
            fr = _mpf_to_fraction(mpmath.re(r))
            for bound in _DENOM_BOUNDS:
                g = fr.limit_denominator(bound)
                cands.add(QQ(g.numerator, g.denominator))
    return sorted(cands)


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    fr = Fraction(-man if sign else man)
    if exp >= 0:
        return fr * (1 << exp)
    return fr / (1 << (-exp))


def _to_mpf(c):
    return mpmath.mpf(int(c.numerator)) / mpmath.mpf(int(c.denominator))
