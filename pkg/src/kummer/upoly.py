"""Univariate polynomials and rational functions over an exact field.

Polynomials are immutable coefficient tuples over a field adapter; the same
class serves QQ[t], QQ(u)[t] and deeper towers.  Rational functions (RatFunc)
form the fraction field of a polynomial ring and can in turn serve as the
coefficient field of another ring.

gcd over a fraction-field coefficient ring is routed through a primitive
polynomial-remainder sequence on cleared denominators, which keeps
intermediate coefficient growth polynomial instead of exponential.
"""

from __future__ import annotations

from .rationals import QQ, qq

_QQ_TYPES = None


def _is_qq(x):
    global _QQ_TYPES
    if _QQ_TYPES is None:
        _QQ_TYPES = (type(QQ(0)), int)
    return isinstance(x, _QQ_TYPES)


class QQField:
    """Field adapter for exact rationals."""

    name = "QQ"

    zero = QQ(0)
    one = QQ(1)

    def coerce(self, v):
        if _is_qq(v):
            return QQ(v)
        if isinstance(v, str):
            return qq(v)
        if isinstance(v, float):
            raise TypeError("floating point is not allowed in exact arithmetic")
        try:
            return QQ(v)
        except Exception:
            raise TypeError(f"cannot coerce {v!r} into QQ") from None

    def is_element(self, v):
        return _is_qq(v)

    def __repr__(self):
        return "QQ"


QQ_FIELD = QQField()


class PolyRing:
    """Ring R[var] over a field adapter R."""

    def __init__(self, field, var: str):
        self.field = field
        self.var = var
        self.zero = Poly(self, ())
        self.one = Poly(self, (field.one,))
        self.gen = Poly(self, (field.zero, field.one))

    def poly(self, coeffs) -> "Poly":
        """Build a polynomial from an iterable of coefficients (low degree first)."""
        f = self.field
        return Poly(self, tuple(c if f.is_element(c) else f.coerce(c) for c in coeffs))

    def const(self, c) -> "Poly":
        f = self.field
        if not f.is_element(c):
            c = f.coerce(c)
        return Poly(self, (c,))

    def coerce(self, v) -> "Poly":
        if isinstance(v, Poly) and v.ring is self:
            return v
        return self.const(v)

    def __repr__(self):
        return f"{self.field!r}[{self.var}]"

    def __eq__(self, other):
        return self is other or (
            isinstance(other, PolyRing) and self.field == other.field and self.var == other.var
        )

    def __hash__(self):
        return hash((id(self.field), self.var))


class Poly:
    """Immutable dense univariate polynomial; trailing zeros stripped."""

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring: PolyRing, coeffs: tuple):
        n = len(coeffs)
        zero = ring.field.zero
        while n and coeffs[n - 1] == zero:
            n -= 1
        self.ring = ring
        self.coeffs = coeffs[:n]
        self._hash = None

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with deg 0 = -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def const_value(self):
        if not self.coeffs:
            return self.ring.field.zero
        if len(self.coeffs) > 1:
            raise ValueError("not a constant polynomial")
        return self.coeffs[0]

    def lead(self):
        if not self.coeffs:
            return self.ring.field.zero
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.var, self.coeffs))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        try:
            other = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    # -- arithmetic ------------------------------------------------------

    def _c(self, other) -> "Poly":
        if isinstance(other, Poly) and other.ring == self.ring:
            return other
        return self.ring.coerce(other)

    def __add__(self, other):
        other = self._c(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.ring, tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly) and other.ring == self.ring:
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return self.ring.zero
            zero = self.ring.field.zero
            out = [zero] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai == zero:
                    continue
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
            return Poly(self.ring, tuple(out))
        # scalar fast path
        f = self.ring.field
        if f.is_element(other):
            c = other
        else:
            try:
                c = f.coerce(other)
            except TypeError:
                return NotImplemented
        return Poly(self.ring, tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        r = self.ring.one
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def divmod(self, other: "Poly"):
        """Euclidean division (field coefficients)."""
        other = self._c(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        zero = self.ring.field.zero
        rem = list(self.coeffs)
        db, lb = other.degree, other.lead()
        if self.degree < db:
            return self.ring.zero, self
        quot = [zero] * (self.degree - db + 1)
        for i in range(self.degree - db, -1, -1):
            c = rem[i + db]
            if c == zero:
                continue
            q = c / lb
            quot[i] = q
            for j, bc in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - q * bc
        return Poly(self.ring, tuple(quot)), Poly(self.ring, tuple(rem))

    def __floordiv__(self, other):
        q, _ = self.divmod(other)
        return q

    def __mod__(self, other):
        _, r = self.divmod(other)
        return r

    def __truediv__(self, other):
        """Exact division; raises if the remainder is nonzero."""
        if not isinstance(other, Poly):
            f = self.ring.field
            c = other if f.is_element(other) else f.coerce(other)
            inv = f.one / c
            return self * inv
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    # -- calculus & evaluation --------------------------------------------

    def derivative(self) -> "Poly":
        f = self.ring.field
        return Poly(
            self.ring,
            tuple(c * f.coerce(i) for i, c in enumerate(self.coeffs) if i > 0),
        )

    def __call__(self, x):
        """Horner evaluation; x may be a field element, Poly, or RatFunc."""
        if not self.coeffs:
            if isinstance(x, Poly):
                return x.ring.zero
            if isinstance(x, RatFunc):
                return x.field.zero
            return self.ring.field.zero
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if isinstance(x, Poly) and not isinstance(acc, Poly):
            return x.ring.const(acc)
        if isinstance(x, RatFunc) and not isinstance(acc, RatFunc):
            return x.field.coerce(acc)
        return acc

    def shift(self, r) -> "Poly":
        """Compose with (var + r): p(var + r)."""
        return self(self.ring.gen + self.ring.const(r))

    def reverse(self, degree=None) -> "Poly":
        """Coefficient reversal: var^degree * p(1/var)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below degree")
        zero = self.ring.field.zero
        out = [zero] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return Poly(self.ring, tuple(out))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lb = self.lead()
        if lb == self.ring.field.one:
            return self
        return self * (self.ring.field.one / lb)

    def ord_at(self, r) -> int:
        """Vanishing order at var = r (field element); zero poly -> big value."""
        if self.is_zero():
            return 1 << 30
        p = self
        lin = self.ring.gen - self.ring.const(r)
        n = 0
        while True:
            q, rem = p.divmod(lin)
            if not rem.is_zero():
                return n
            n += 1
            p = q

    def ord_at_zero(self) -> int:
        if self.is_zero():
            return 1 << 30
        zero = self.ring.field.zero
        n = 0
        while self.coeffs[n] == zero:
            n += 1
        return n

    def __repr__(self):
        if not self.coeffs:
            return "0"
        var = self.ring.var
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == self.ring.field.zero:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"({c})*{var}")
            else:
                parts.append(f"({c})*{var}^{i}")
        return " + ".join(parts)


# -- gcd machinery --------------------------------------------------------


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd.  gcd(0, 0) = 0."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if isinstance(p.ring.field, FracField):
        return _gcd_fracfield(p, q)
    while not q.is_zero():
        p, q = q, p % q
        q = q.monic()  # keeps coefficient size down over QQ
    return p.monic()


def _clear_denominators(p: Poly):
    """Poly over FracField(R[u]) -> (Poly over R[u]-coefficient ring, denominator)."""
    ff = p.ring.field
    ring = ff.ring
    den = ring.one
    for c in p.coeffs:
        den = _ring_lcm(den, c.den)
    coeffs = []
    for c in p.coeffs:
        coeffs.append(c.num * (den / c.den))
    return coeffs, den


def _ring_lcm(a: Poly, b: Poly) -> Poly:
    g = poly_gcd(a, b)
    return ((a * b) / g).monic()


def _content(coeffs) -> Poly:
    g = None
    for c in coeffs:
        if isinstance(c, Poly) and c.is_zero():
            continue
        g = c if g is None else poly_gcd(g, c)
        if g.is_const():
            return g.ring.one
    if g is None:
        return coeffs[0].ring.one if coeffs else None
    return g.monic()


def _primitive(coeffs):
    cont = _content(coeffs)
    if cont is None or cont.is_const():
        return list(coeffs)
    return [c / cont for c in coeffs]


def _pseudo_rem(a, b):
    """Pseudo remainder of coefficient lists (Poly-valued coefficients)."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        lead = r[i + db]
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[i + j] = r[i + j] - lead * b[j]
        while r and (isinstance(r[-1], Poly) and r[-1].is_zero()):
            r.pop()
        if len(r) - 1 < i + db:
            continue
    while r and isinstance(r[-1], Poly) and r[-1].is_zero():
        r.pop()
    return r


def _gcd_fracfield(p: Poly, q: Poly) -> Poly:
    """gcd over a fraction-field via primitive PRS on cleared denominators."""
    a, _ = _clear_denominators(p)
    b, _ = _clear_denominators(q)
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return p.ring.one
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    ff = p.ring.field
    coeffs = tuple(ff.from_ring(c) for c in a)
    return Poly(p.ring, coeffs).monic()


def squarefree_part(p: Poly):
    """Decompose p = c * s * r^2 with s squarefree monic; returns (s, r).

    r collects multiplicity: each factor of multiplicity m contributes
    floor(m/2) copies to r and (m mod 2) to s.
    """
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if p.is_const():
        return p.ring.one, p.ring.one
    s = p.ring.one
    r = p.ring.one
    for a, i in squarefree_decomposition(p):
        if i % 2 == 1:
            s = s * a
        r = r * a ** (i // 2)
    return s, r


def squarefree_decomposition(p: Poly):
    """Yun's algorithm.  Returns [(a_i, i)] with p = c * prod a_i^i, a_i squarefree
    monic and pairwise coprime."""
    if p.is_const():
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    if g.is_const():
        return [(p.monic(), 1)]
    c = p / g
    d = p.derivative() / g - c.derivative()
    i = 1
    while not c.is_const():
        a = poly_gcd(c, d)
        if not a.is_const():
            out.append((a, i))
        c = c / a
        d = d / a - c.derivative()
        i += 1
        if i > p.degree + 2:
            raise RuntimeError("squarefree decomposition failed to terminate")
    return out


def is_squarefree(p: Poly) -> bool:
    return poly_gcd(p, p.derivative()).is_const()


def poly_sqrt(p: Poly):
    """Exact square root of a perfect-square polynomial, or None."""
    if p.is_zero():
        return p
    d = p.degree
    if d % 2:
        return None
    f = p.ring.field
    lc = p.lead()
    root_lc = _field_sqrt(f, lc)
    if root_lc is None:
        return None
    h = d // 2
    zero = f.zero
    out = [zero] * (h + 1)
    out[h] = root_lc
    # solve coefficients from the top down
    for k in range(h - 1, -1, -1):
        # coefficient of x^(k+h) in out^2 must match p
        acc = zero
        for i in range(k + 1, h):
            j = k + h - i
            if 0 <= j <= h and j > k:
                acc = acc + out[i] * out[j]
        target = p[k + h]
        num = target - acc
        out[k] = num / (out[h] + out[h])
    cand = Poly(p.ring, tuple(out))
    if cand * cand == p:
        return cand
    return None


def _field_sqrt(field, x):
    from .rationals import is_square_rat, sqrt_rat

    if isinstance(field, QQField):
        return sqrt_rat(x) if is_square_rat(x) else None
    if isinstance(field, FracField):
        ns = poly_sqrt(x.num)
        ds = poly_sqrt(x.den)
        if ns is None or ds is None:
            return None
        return RatFunc(field, ns, ds)
    raise TypeError("no sqrt for this field")


def interpolate(ring: PolyRing, points) -> Poly:
    """Lagrange interpolation through (x_i, y_i) field pairs."""
    f = ring.field
    total = ring.zero
    pts = [(f.coerce(x), f.coerce(y)) for x, y in points]
    for i, (xi, yi) in enumerate(pts):
        num = ring.one
        den = f.one
        for j, (xj, _) in enumerate(pts):
            if i == j:
                continue
            num = num * (ring.gen - ring.const(xj))
            den = den * (xi - xj)
        total = total + num * (yi / den)
    return total


# -- fraction field --------------------------------------------------------


class FracField:
    """Fraction field of a PolyRing; elements are RatFunc."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.zero = RatFunc(self, ring.zero, ring.one)
        self.one = RatFunc(self, ring.one, ring.one)

    @property
    def var(self):
        return self.ring.var

    def coerce(self, v) -> "RatFunc":
        if isinstance(v, RatFunc) and v.field is self:
            return v
        if isinstance(v, Poly) and v.ring == self.ring:
            return RatFunc(self, v, self.ring.one)
        return RatFunc(self, self.ring.coerce(self.ring.field.coerce(v)), self.ring.one)

    def from_ring(self, p: Poly) -> "RatFunc":
        return RatFunc(self, p, self.ring.one)

    def gen(self) -> "RatFunc":
        return self.from_ring(self.ring.gen)

    def is_element(self, v):
        return isinstance(v, RatFunc) and v.field is self

    def __repr__(self):
        return f"Frac({self.ring!r})"

    def __eq__(self, other):
        return self is other or (isinstance(other, FracField) and self.ring == other.ring)

    def __hash__(self):
        return hash(("frac", self.ring))


class RatFunc:
    """Reduced rational function: gcd(num, den) = 1, den monic."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: FracField, num: Poly, den: Poly, reduce: bool = True):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            if num.is_zero():
                den = field.ring.one
            else:
                g = poly_gcd(num, den)
                if not g.is_const():
                    num = num / g
                    den = den / g
                lc = den.lead()
                if lc != field.ring.field.one:
                    inv = field.ring.field.one / lc
                    num = num * inv
                    den = den * inv
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den.is_const()

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError("not polynomial")
        return self.num

    def _c(self, other):
        if isinstance(other, RatFunc) and other.field == self.field:
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        other = self._c(other)
        return RatFunc(
            self.field, self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._c(other))

    def __rsub__(self, other):
        return self._c(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = self._c(other)
            except (TypeError, ValueError):
                return NotImplemented
        return RatFunc(self.field, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._c(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RatFunc(self.field, self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._c(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (self.field.one / self) ** (-n)
        return RatFunc(self.field, self.num**n, self.den**n)

    def __eq__(self, other):
        if isinstance(other, RatFunc) and other.field == self.field:
            return self.num == other.num and self.den == other.den
        if other == 0:
            return self.num.is_zero()
        try:
            other = self._c(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __bool__(self):
        return not self.num.is_zero()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __call__(self, x):
        n = self.num(x)
        d = self.den(x)
        return n / d

    def degree_map(self) -> int:
        """Degree of the induced map P1 -> P1 (max of num/den degrees)."""
        return max(self.num.degree, self.den.degree)

    def ord_at(self, r) -> int:
        """Order of vanishing at var = r (negative for a pole)."""
        return self.num.ord_at(r) - self.den.ord_at(r)

    def ord_at_infinity(self) -> int:
        return self.den.degree - self.num.degree

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(self.field, n.derivative() * d - n * d.derivative(), d * d)

    def __repr__(self):
        if self.den.is_const() and self.den.lead() == self.field.ring.field.one:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def is_square_ratfunc(x: RatFunc) -> bool:
    """Exact: is x a square in the rational function field?"""
    if x.is_zero():
        return True
    prod = x.num * x.den
    return poly_sqrt(prod) is not None


# -- canonical towers -------------------------------------------------------

RING_T = PolyRing(QQ_FIELD, "t")
FIELD_QT = FracField(RING_T)

RING_U = PolyRing(QQ_FIELD, "u")
FIELD_QU = FracField(RING_U)
RING_UT = PolyRing(FIELD_QU, "t")  # QQ(u)[t], coefficients in QQ(u)
FIELD_QUT = FracField(RING_UT)
