"""Elliptic surfaces over the rational function field.

Models are y^2 = x^3 + a2 x^2 + a4 x + a6 with polynomial coefficients
(every displayed equation in the catalog is already free of xy and y
terms).  Kodaira types are read off from (ord c4, ord Delta) at each
place, which is complete in residue characteristic zero; minimality is
checked and enforced including the chart at infinity.
"""

from __future__ import annotations

from .rationals import QQ
from .roots import rational_roots
from .upoly import FracField, Poly, PolyRing, RatFunc, is_squarefree, poly_gcd

INF = "inf"  # the place at infinity


class KodairaType:
    """Kodaira symbol: ('I', n), ('I*', n), ('II',), ('III',), ('IV',),
    ('II*',), ('III*',), ('IV*',)."""

    def __init__(self, sym: str, n: int = 0):
        self.sym = sym
        self.n = n

    def __eq__(self, other):
        return (
            isinstance(other, KodairaType) and self.sym == other.sym and self.n == other.n
        )

    def __hash__(self):
        return hash((self.sym, self.n))

    @property
    def euler(self) -> int:
        if self.sym == "I":
            return self.n
        if self.sym == "I*":
            return self.n + 6
        return {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}[self.sym]

    @property
    def component_count(self) -> int:
        if self.sym == "I":
            return max(self.n, 1)
        if self.sym == "I*":
            return self.n + 5
        return {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}[self.sym]

    @property
    def component_group_order(self) -> int:
        if self.sym == "I":
            return self.n
        if self.sym == "I*":
            return 4
        return {"II": 1, "III": 2, "IV": 3, "IV*": 3, "III*": 2, "II*": 1}[self.sym]

    @property
    def root_lattice_disc(self) -> int:
        """|disc| of the lattice spanned by non-identity components."""
        o = self.component_group_order
        return o if o else 1

    def root_label(self) -> str:
        """A/D/E label as used in the fibration tables."""
        if self.sym == "I":
            return f"A{self.n - 1}" if self.n >= 2 else "A0"
        if self.sym == "I*":
            return f"D{self.n + 4}"
        return {"II": "A0", "III": "A1", "IV": "A2", "IV*": "E6", "III*": "E7", "II*": "E8"}[
            self.sym
        ]

    def __repr__(self):
        if self.sym == "I":
            return f"I{self.n}"
        if self.sym == "I*":
            return f"I{self.n}*"
        return self.sym


def kodaira_from_label(label: str) -> KodairaType:
    """Parse a table label: A_n, D_n, E_n (root-lattice style)."""
    kind, n = label[0], int(label[1:])
    if kind == "A":
        return KodairaType("I", n + 1)
    if kind == "D":
        return KodairaType("I*", n - 4)
    if kind == "E":
        return {6: KodairaType("IV*"), 7: KodairaType("III*"), 8: KodairaType("II*")}[n]
    raise ValueError(f"bad fiber label {label!r}")


class KodairaFiber:
    def __init__(self, place, ktype: KodairaType, count: int = 1):
        self.place = place  # rational number, INF, or ('batch', poly)
        self.ktype = ktype
        self.count = count  # batch places carry deg(poly) fibers of this type

    @property
    def euler(self):
        return self.ktype.euler * self.count

    def __repr__(self):
        return f"{self.ktype!r}@{self.place}" + (f" x{self.count}" if self.count > 1 else "")


class WeierstrassModel:
    """y^2 = x^3 + a2 x^2 + a4 x + a6 over ring.field; chi fixed by degrees."""

    def __init__(self, ring: PolyRing, a2: Poly, a4: Poly, a6: Poly):
        self.ring = ring
        self.a2 = ring.coerce(a2) if not isinstance(a2, Poly) else a2
        self.a4 = ring.coerce(a4) if not isinstance(a4, Poly) else a4
        self.a6 = ring.coerce(a6) if not isinstance(a6, Poly) else a6
        self._disc = None

    # -- invariants --------------------------------------------------------

    def rhs(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def b_invariants(self):
        b2 = 4 * self.a2
        b4 = 2 * self.a4
        b6 = 4 * self.a6
        b8 = 4 * self.a2 * self.a6 - self.a4 * self.a4
        return b2, b4, b6, b8

    def c4(self) -> Poly:
        b2, b4, _, _ = self.b_invariants()
        return b2 * b2 - 24 * b4

    def c6(self) -> Poly:
        b2, b4, b6, _ = self.b_invariants()
        return -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6

    def disc(self) -> Poly:
        if self._disc is None:
            b2, b4, b6, b8 = self.b_invariants()
            self._disc = (
                -(b2 * b2) * b8 - 8 * (b4**3) - 27 * (b6 * b6) + 9 * b2 * b4 * b6
            )
        return self._disc

    def j_invariant(self) -> RatFunc:
        field = FracField(self.ring)
        d = self.disc()
        if d.is_zero():
            raise ValueError("discriminant vanishes identically; not an elliptic surface")
        c4 = self.c4()
        return RatFunc(field, c4 * c4 * c4, d)

    def check_c_identity(self) -> bool:
        return 1728 * self.disc() == self.c4() ** 3 - self.c6() ** 2

    # -- geometry of the base ------------------------------------------------

    @property
    def chi(self) -> int:
        """Arithmetic genus parameter: smallest k with deg a_j <= 2jk."""
        k = 0
        for j, a in ((2, self.a2), (4, self.a4), (6, self.a6)):
            if not a.is_zero():
                k = max(k, -(-a.degree // j))  # ceil
        return max(k, 1)

    def infinity_chart(self) -> "WeierstrassModel":
        """Model in the coordinate v = 1/t with x, y rescaled by weight chi."""
        k = self.chi
        out = []
        for j, a in ((2, self.a2), (4, self.a4), (6, self.a6)):
            out.append(a.reverse(j * k))
        return WeierstrassModel(self.ring, *out)

    def translate_base(self, r) -> "WeierstrassModel":
        """Move the place t = r to 0."""
        return WeierstrassModel(
            self.ring, self.a2.shift(r), self.a4.shift(r), self.a6.shift(r)
        )

    def scale_x(self, lam: Poly) -> "WeierstrassModel":
        """(x, y) -> (lam^2 x, lam^3 y) with exact division by lam powers."""
        return WeierstrassModel(
            self.ring,
            self.a2 / (lam**2),
            self.a4 / (lam**4),
            self.a6 / (lam**6),
        )

    def translate_x(self, e) -> "WeierstrassModel":
        """x -> x + e for e in the coefficient ring (section-style shifts)."""
        e = self.ring.coerce(e) if not isinstance(e, Poly) else e
        a2 = self.a2 + 3 * e
        a4 = self.a4 + 2 * self.a2 * e + 3 * e * e
        a6 = self.rhs(e)
        return WeierstrassModel(self.ring, a2, a4, a6)

    def __repr__(self):
        return f"WModel(a2={self.a2!r}, a4={self.a4!r}, a6={self.a6!r})"


# -- minimality ----------------------------------------------------------------


def _ord_triple_at_zero(w: WeierstrassModel):
    return (
        w.a2.ord_at_zero() if not w.a2.is_zero() else 10**9,
        w.a4.ord_at_zero() if not w.a4.is_zero() else 10**9,
        w.a6.ord_at_zero() if not w.a6.is_zero() else 10**9,
    )


def is_minimal_at(w: WeierstrassModel, place) -> bool:
    loc = localize(w, place)
    o2, o4, o6 = _ord_triple_at_zero(loc)
    return not (o2 >= 2 and o4 >= 4 and o6 >= 6)


def localize(w: WeierstrassModel, place) -> WeierstrassModel:
    """Model with the given place moved to the local coordinate origin."""
    if place == INF:
        return w.infinity_chart()
    return w.translate_base(place)


def minimalize(w: WeierstrassModel) -> WeierstrassModel:
    """Remove every (u^4, u^6)-reducible place (finite places; infinity is
    automatically minimal at the intrinsic weight chi)."""
    ring = w.ring
    changed = True
    while changed:
        changed = False
        d = w.disc()
        if d.is_zero():
            raise ValueError("discriminant vanishes identically")
        roots, _ = rational_roots(d)
        for r, m in roots:
            if m < 12:
                continue
            loc = w.translate_base(r)
            o2, o4, o6 = _ord_triple_at_zero(loc)
            if o2 >= 2 and o4 >= 4 and o6 >= 6:
                lam = ring.gen - ring.const(r)
                w = w.scale_x(lam)
                changed = True
                break
    return w


# -- Kodaira classification ------------------------------------------------------


def _ord_at_place(p: Poly, place) -> int:
    if p.is_zero():
        return 10**9
    if place == INF:
        raise ValueError("use the infinity chart for the place at infinity")
    return p.ord_at(place)


def classify_local(ord_c4: int, ord_delta: int) -> KodairaType:
    """Kodaira type from orders of c4 and Delta (residue char 0, minimal)."""
    d = ord_delta
    if d == 0:
        return KodairaType("I", 0)
    if ord_c4 == 0:
        return KodairaType("I", d)
    if d == 2:
        return KodairaType("II")
    if d == 3:
        return KodairaType("III")
    if d == 4:
        return KodairaType("IV")
    if d == 6:
        return KodairaType("I*", 0)
    if d >= 7 and ord_c4 == 2:
        return KodairaType("I*", d - 6)
    if d == 8:
        return KodairaType("IV*")
    if d == 9:
        return KodairaType("III*")
    if d == 10:
        return KodairaType("II*")
    raise ValueError(f"no Kodaira type for (ord c4, ord Delta) = ({ord_c4}, {d})")


def kodaira_at(w: WeierstrassModel, place) -> KodairaType:
    loc = localize(w, place)
    o2, o4, o6 = _ord_triple_at_zero(loc)
    if o2 >= 2 and o4 >= 4 and o6 >= 6:
        raise ValueError(f"model is not minimal at {place}; minimalize first")
    d = loc.disc().ord_at_zero()
    c4 = loc.c4()
    k4 = c4.ord_at_zero() if not c4.is_zero() else 10**9
    return classify_local(k4, d)


def fiber_configuration(w: WeierstrassModel, expected_positions=None):
    """Classify singular fibers at every place.

    expected_positions: optional list of rational positions / INF that must
    carry the reducible fibers; remaining discriminant roots must be I1.
    Returns list of KodairaFiber; raises if Euler numbers do not sum to
    12*chi.
    """
    ring = w.ring
    delta = w.disc()
    if delta.is_zero():
        raise ValueError("discriminant vanishes identically")
    fibers = []
    work = delta
    seen = set()
    if expected_positions:
        for pos in expected_positions:
            if pos == INF or pos in seen:
                continue
            seen.add(pos)
            lin = ring.gen - ring.const(pos)
            m = 0
            while True:
                q, rem = work.divmod(lin)
                if not rem.is_zero():
                    break
                work, m = q, m + 1
            if m == 0:
                raise ValueError(f"expected position {pos} does not divide the discriminant")
            fibers.append(KodairaFiber(pos, kodaira_at(w, pos)))
    roots, work = rational_roots(work)
    for r, m in roots:
        if r in seen:
            raise ValueError("duplicate place")
        seen.add(r)
        fibers.append(KodairaFiber(r, kodaira_at(w, r)))
    # residual: nonrational places; must be squarefree and multiplicative
    if work.degree > 0:
        if not is_squarefree(work):
            raise ValueError("irrational multiple discriminant roots; unsupported")
        if not poly_gcd(work, w.c4()).is_const():
            raise ValueError("irrational additive place; unsupported")
        fibers.append(KodairaFiber(("batch", work), KodairaType("I", 1), count=work.degree))
    # infinity
    loc = w.infinity_chart()
    dinf = loc.disc().ord_at_zero()
    if dinf > 0:
        fibers.append(KodairaFiber(INF, kodaira_at(w, INF)))
    total = sum(f.euler for f in fibers)
    if total != 12 * w.chi:
        raise ValueError(f"Euler numbers sum to {total}, expected {12 * w.chi}")
    return fibers


def trivial_lattice_disc(fibers) -> int:
    """|disc| of the trivial lattice (zero section, fiber components)."""
    d = 1
    for f in fibers:
        d *= f.ktype.root_lattice_disc ** f.count
    return d
