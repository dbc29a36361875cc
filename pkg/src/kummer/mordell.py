"""Mordell-Weil machinery: group law, contacts, fiber components, heights.

Sections are points of y^2 = x^3 + a2 x^2 + a4 x + a6 over the function
field.  The height pairing is the canonical one,

    <P,Q> = 2*chi + P.O + Q.O - P.Q - sum_v contr_v(P,Q),

with intersection numbers computed from pole orders (P.Q via translation
invariance as (P-Q).O) and local correction terms from the position of each
section in the special fiber.  Components are identified by an exact
resolution walk: repeatedly blow up the point or line where the section
meets the singular locus, tracking coordinates, until the section exits
through a smooth point; the exit signature pins down the component.
"""

from __future__ import annotations

from .rationals import QQ, is_square_rat, sqrt_rat
from .roots import rational_roots
from .upoly import FracField, Poly, RatFunc, poly_gcd, poly_sqrt, squarefree_decomposition
from .wmodel import INF, KodairaType, WeierstrassModel, localize

O_POINT = "O"


class Section:
    """A section: the zero section or an affine point (x, y) in RatFunc coords."""

    __slots__ = ("x", "y", "is_zero")

    def __init__(self, x=None, y=None):
        if x is None:
            self.is_zero = True
            self.x = self.y = None
        else:
            self.is_zero = False
            self.x = x
            self.y = y

    @classmethod
    def zero(cls):
        return cls()

    def __eq__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.is_zero, self.x, self.y))

    def __repr__(self):
        return "O" if self.is_zero else f"({self.x!r}, {self.y!r})"


def on_curve(w: WeierstrassModel, p: Section) -> bool:
    if p.is_zero:
        return True
    field = FracField(w.ring)
    rhs = (
        p.x**3
        + field.from_ring(w.a2) * p.x**2
        + field.from_ring(w.a4) * p.x
        + field.from_ring(w.a6)
    )
    return p.y * p.y == rhs


def negate(p: Section) -> Section:
    if p.is_zero:
        return p
    return Section(p.x, -p.y)


def add(w: WeierstrassModel, p: Section, q: Section) -> Section:
    if p.is_zero:
        return q
    if q.is_zero:
        return p
    field = FracField(w.ring)
    a2 = field.from_ring(w.a2)
    a4 = field.from_ring(w.a4)
    if p.x == q.x:
        if p.y == -q.y:
            return Section.zero()
        lam = (3 * p.x * p.x + 2 * a2 * p.x + a4) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - a2 - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return Section(x3, -y3)


def subtract(w, p, q):
    return add(w, p, negate(q))


def multiple(w, p: Section, n: int) -> Section:
    if n < 0:
        return multiple(w, negate(p), -n)
    acc = Section.zero()
    step = p
    while n:
        if n & 1:
            acc = add(w, acc, step)
        step = add(w, step, step)
        n >>= 1
    return acc


def torsion_order(w, p: Section, bound: int = 12):
    """Smallest n <= bound with nP = O, else None (non-torsion).

    The bound is justified for the catalog surfaces: torsion embeds in the
    product of fiber component groups, none of which has exponent above 12.
    """
    acc = Section.zero()
    for n in range(1, bound + 1):
        acc = add(w, acc, p)
        if acc.is_zero:
            return n
    return None


# -- intersection with the zero section ------------------------------------------


def contact_with_zero(w: WeierstrassModel, p: Section) -> QQ:
    """P.O: half the pole degree of x_P, including the chart at infinity."""
    if p.is_zero:
        return QQ(0)
    total = QQ(0)
    den = p.x.den
    for factor, mult in squarefree_decomposition(den):
        if mult % 2:
            raise ValueError(
                f"odd pole order {mult} of x-coordinate at {factor!r}; "
                "model is non-minimal or the point is not a section"
            )
        total += QQ(factor.degree * mult, 2)
    excess = (p.x.num.degree - p.x.den.degree) - 2 * w.chi
    if excess > 0:
        if excess % 2:
            raise ValueError("odd pole order of x at infinity")
        total += QQ(excess, 2)
    return total


def intersection(w, p: Section, q: Section) -> QQ:
    """P.Q via translation invariance: (P-Q).O."""
    if p.is_zero:
        return contact_with_zero(w, q)
    if q.is_zero:
        return contact_with_zero(w, p)
    if p == q:
        raise ValueError("self-intersection of a section is -chi, not handled here")
    return contact_with_zero(w, subtract(w, p, q))


# -- component identification -----------------------------------------------------


def _localize_section(w: WeierstrassModel, p: Section, place):
    """Section coordinates in the local coordinate of the place."""
    field = FracField(w.ring)
    if place == INF:
        k = w.chi
        x = _flip(p.x, field, 2 * k)
        y = _flip(p.y, field, 3 * k)
        return x, y
    r = place
    x = RatFunc(field, p.x.num.shift(r), p.x.den.shift(r))
    y = RatFunc(field, p.y.num.shift(r), p.y.den.shift(r))
    return x, y


def _flip(f: RatFunc, field, weight: int) -> RatFunc:
    """v^weight * f(1/v) as an exact rational function in v."""
    dn, dd = f.num.degree, f.den.degree
    num = f.num.reverse(dn)
    den = f.den.reverse(dd)
    shift = weight + dd - dn
    ring = field.ring
    if shift >= 0:
        num = num * ring.gen**shift
    else:
        den = den * ring.gen ** (-shift)
    return RatFunc(field, num, den)


def _value_at_zero(f: RatFunc):
    """f(0), or None when f has a pole at 0."""
    if f.den(QQ(0)) == 0:
        return None
    return f.num(QQ(0)) / f.den(QQ(0))


def _ord0(f: RatFunc) -> int:
    if f.is_zero():
        return 1 << 30
    return f.num.ord_at_zero() - f.den.ord_at_zero()


IDENTITY = ("identity",)


def component_signature(w: WeierstrassModel, p: Section, place):
    """Exit signature of the section through the resolution at the place.

    ('identity',) when the section meets the smooth locus of the Weierstrass
    fiber; otherwise a path of blowup steps ending in an exit tag.  Two
    sections lie on the same fiber component iff their signatures agree.
    """
    if p.is_zero:
        return IDENTITY
    loc = localize(w, place)
    x, y = _localize_section(w, p, place)
    xv = _value_at_zero(x)
    if xv is None:  # pole: the section meets the zero section's neighborhood
        return IDENTITY
    yv = _value_at_zero(y)
    assert yv is not None
    ring = loc.ring
    s = ring.gen
    # current curve y^2 = C3 x^3 + C2 x^2 + C1 x + C0
    c3, c2, c1, c0 = ring.one, loc.a2, loc.a4, loc.a6
    path = []
    for _ in range(64):
        gbar = _fiber_poly(c3, c2, c1, c0)
        if gbar is None:
            # G = 0 mod s: double line y^2 = 0; factor out s
            m = min(
                c.ord_at_zero() if not c.is_zero() else 1 << 30 for c in (c3, c2, c1, c0)
            )
            assert m >= 1
            if m >= 2:
                # line blowup y -> s y
                c3, c2, c1, c0 = (c / (s * s) if not c.is_zero() else c for c in (c3, c2, c1, c0))
                assert _ord0(y) >= 1 or y.is_zero()
                y = y / RatFunc(y.field, s, ring.one) if not y.is_zero() else y
                path.append(("ln",))
                continue
            # m == 1: sections sit over roots of H = (G/s) mod s
            h3, h2, h1, h0 = (c / s if not c.is_zero() else c for c in (c3, c2, c1, c0))
            hbar = _fiber_poly_values(h3, h2, h1, h0)
            xv = _value_at_zero(x)
            mult = _root_multiplicity(hbar, xv)
            if mult == 0:
                raise ValueError("section reduced off the singular locus of a double line")
            path.append(("pt", xv, mult))
            c3, c2, c1, c0, x, y = _point_blowup(ring, c3, c2, c1, c0, x, y, xv)
            continue
        xv = _value_at_zero(x)
        yv = _value_at_zero(y)
        gprime = gbar.derivative()
        if yv != 0 or gprime(xv) != 0:
            # smooth point of the fiber in this chart: exit
            if not path:
                return IDENTITY  # smooth point of the Weierstrass fiber itself
            return tuple(path) + (_exit_tag(gbar, xv, yv),)
        # fiber-singular point; check the surface continues (divisibility)
        mult = _root_multiplicity(gbar, xv)
        cc3, cc2, cc1, cc0, xx, yy = _shift_x(ring, c3, c2, c1, c0, x, y, xv)
        o1 = cc1.ord_at_zero() if not cc1.is_zero() else 1 << 30
        o0 = cc0.ord_at_zero() if not cc0.is_zero() else 1 << 30
        if o1 >= 1 and o0 >= 2:
            path.append(("pt", xv, mult))
            c3, c2, c1, c0, x, y = _point_blowup_shifted(ring, cc3, cc2, cc1, cc0, xx, yy)
            continue
        # surface is regular here (I1 node / II cusp): unique component
        return tuple(path) + (("exit-sing",),)
    raise RuntimeError("component walk failed to terminate")


from .upoly import PolyRing, QQ_FIELD  # noqa: E402

_XRING = PolyRing(QQ_FIELD, "xbar")


def _fiber_poly(c3, c2, c1, c0):
    """G mod s as a univariate poly in x, or None if identically zero."""
    vals = [_const0(c) for c in (c0, c1, c2, c3)]
    if all(v == 0 for v in vals):
        return None
    return _XRING.poly(vals)


def _fiber_poly_values(c3, c2, c1, c0):
    return _XRING.poly([_const0(c0), _const0(c1), _const0(c2), _const0(c3)])


def _const0(c: Poly):
    return c[0] if not c.is_zero() else QQ(0)


def _root_multiplicity(poly, r) -> int:
    m = 0
    ring = poly.ring
    lin = ring.gen - ring.const(r)
    while not poly.is_zero():
        q, rem = poly.divmod(lin)
        if not rem.is_zero():
            break
        poly = q
        m += 1
    return m


def _shift_x(ring, c3, c2, c1, c0, x, y, xv):
    e = ring.const(xv)
    nc2 = c2 + 3 * c3 * e
    nc1 = c1 + 2 * c2 * e + 3 * c3 * e * e
    nc0 = c0 + c1 * e + c2 * e * e + c3 * e * e * e
    fx = x - x.field.coerce(xv)
    return c3, nc2, nc1, nc0, fx, y


def _point_blowup(ring, c3, c2, c1, c0, x, y, xv):
    cc3, cc2, cc1, cc0, xx, yy = _shift_x(ring, c3, c2, c1, c0, x, y, xv)
    return _point_blowup_shifted(ring, cc3, cc2, cc1, cc0, xx, yy)


def _point_blowup_shifted(ring, c3, c2, c1, c0, x, y):
    """(x, y) -> (s x', s y') and divide the equation by s^2."""
    s = ring.gen
    nc3 = c3 * s
    nc2 = c2
    nc1 = c1 / s
    nc0 = c0 / (s * s)
    fs = x.field.from_ring(s)
    return nc3, nc2, nc1, nc0, x / fs, y / fs


def _exit_tag(gbar, xv, yv):
    """Which component of y^2 = gbar(x) the smooth point (xv, yv) is on."""
    lc = gbar.lead()
    body = gbar.monic()
    h = poly_sqrt(body)
    if h is None:
        return ("exit-irr",)
    # geometric line pair y = +- sqrt(lc) h(x)
    if not is_square_rat(lc):
        raise ValueError("rational section on a non-split component pair")
    rt = sqrt_rat(lc)
    if yv == rt * h(xv):
        return ("exit-split", 1)
    if yv == -rt * h(xv):
        return ("exit-split", -1)
    raise ValueError("exit point does not lie on either line of the split pair")


# -- local correction terms -------------------------------------------------------


def local_contribution(ktype: KodairaType, sig_p, sig_q) -> QQ:
    """Shioda correction term contr_v(P, Q) from exit signatures."""
    if sig_p == IDENTITY or sig_q == IDENTITY:
        return QQ(0)
    sym, n = ktype.sym, ktype.n
    if sym == "I":
        if n <= 1:
            return QQ(0)
        i = _cyclic_index(sig_p, n)
        j = _cyclic_index(sig_q, n)
        if i == 0 or j == 0:
            return QQ(0)
        if i > j:
            i, j = j, i
        return QQ(i * (n - j), n)
    if sym == "II" or sym == "II*":
        if sym == "II*":
            raise ValueError("section on a non-identity component of II*")
        return QQ(0)
    if sym == "III":
        return QQ(1, 2)
    if sym == "III*":
        return QQ(3, 2)
    if sym == "IV":
        return QQ(2, 3) if sig_p == sig_q else QQ(1, 3)
    if sym == "IV*":
        return QQ(4, 3) if sig_p == sig_q else QQ(2, 3)
    if sym == "I*":
        if n == 0:
            return QQ(1) if sig_p == sig_q else QQ(1, 2)
        near_p = _istar_near(sig_p)
        near_q = _istar_near(sig_q)
        if near_p and near_q:
            return QQ(1)
        if near_p or near_q:
            return QQ(1, 2)
        if sig_p == sig_q:
            return QQ(n + 4, 4)
        return QQ(n + 2, 4)
    raise ValueError(f"no contribution rule for {ktype!r}")


def _cyclic_index(sig, n: int) -> int:
    """Component index in Z/n from an I_n exit signature."""
    if sig == IDENTITY:
        return 0
    *steps, tag = sig
    level = sum(1 for st in steps if st[0] == "pt")
    if tag[0] == "exit-sing":
        # node of I1 (or crossing; crossings are excluded for sections)
        if n > 1:
            raise ValueError("section through a fiber node on I_n, n > 1")
        return 0
    if tag[0] == "exit-irr":
        if 2 * level != n:
            raise ValueError("irreducible exit at the wrong depth for I_n")
        return level
    sign = tag[1]
    return level if sign > 0 else n - level


def _istar_near(sig) -> bool:
    """I_n* (n>=1): near simple component iff the walk passed the simple
    root of the cubic at the first double-line stage (path[1])."""
    steps = [st for st in sig[:-1] if st[0] == "pt"]
    if len(steps) < 2:
        raise ValueError("I_n* signature too short")
    return steps[1][2] == 1


# -- heights ---------------------------------------------------------------------


class FiberContext:
    """Classified reducible fibers of a model, with signature caching."""

    def __init__(self, w: WeierstrassModel, fibers):
        self.w = w
        # only fibers with nontrivial component group need correction terms
        self.fibers = [
            f
            for f in fibers
            if f.ktype.component_group_order > 1 and not isinstance(f.place, tuple)
        ]
        self._sig_cache = {}

    def signature(self, p: Section, place):
        key = (id(p), place)
        if key not in self._sig_cache:
            self._sig_cache[key] = component_signature(self.w, p, place)
        return self._sig_cache[key]

    def correction_sum(self, p: Section, q: Section) -> QQ:
        total = QQ(0)
        for f in self.fibers:
            if f.ktype.component_group_order <= 1:
                continue
            sp = self.signature(p, f.place)
            sq = self.signature(q, f.place)
            total += local_contribution(f.ktype, sp, sq)
        return total

    def corrections(self, p: Section) -> list:
        out = []
        for f in self.fibers:
            if f.ktype.component_group_order <= 1:
                continue
            sp = self.signature(p, f.place)
            out.append((f.place, f.ktype, local_contribution(f.ktype, sp, sp)))
        return out


def height_pairing(w: WeierstrassModel, ctx: FiberContext, p: Section, q: Section) -> QQ:
    """Canonical height pairing.

    <P,Q> = chi + P.O + Q.O - P.Q - sum contr_v(P,Q) for P != Q, and
    h(P) = 2 chi + 2 P.O - sum contr_v(P) on the diagonal (these agree via
    the self-intersection P.P = -chi of a section).
    """
    if p.is_zero or q.is_zero:
        return QQ(0)
    chi = w.chi
    if p == q:
        return 2 * chi + 2 * contact_with_zero(w, p) - ctx.correction_sum(p, p)
    pq = intersection(w, p, q)
    return (
        chi
        + contact_with_zero(w, p)
        + contact_with_zero(w, q)
        - pq
        - ctx.correction_sum(p, q)
    )


def mw_gram(w: WeierstrassModel, ctx: FiberContext, basis) -> list:
    n = len(basis)
    g = [[QQ(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = height_pairing(w, ctx, basis[i], basis[j])
    return g


def verify_ns_discriminant(fibers, torsion_order_val: int, mw_det) -> QQ:
    """|disc Triv| * det(MW gram) / |tors|^2; must be 64 for the catalog."""
    from .wmodel import trivial_lattice_disc

    return QQ(trivial_lattice_disc(fibers)) * mw_det / (torsion_order_val**2)
