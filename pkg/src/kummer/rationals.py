"""Exact rational scalars.

All scalar arithmetic in this package is exact; there is no floating point
anywhere in the computational core.  The scalar type is gmpy2.mpq when
available (much faster), with fractions.Fraction as a drop-in fallback.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as QQ  # type: ignore
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ  # type: ignore

QQ0 = QQ(0)
QQ1 = QQ(1)


def qq(value, den=None):
    """Coerce to an exact rational.  Accepts int, rational, or 'p/q' string."""
    if den is not None:
        return QQ(value, den)
    if isinstance(value, str):
        s = value.strip()
        if "/" in s:
            p, q = s.split("/")
            return QQ(int(p), int(q))
        return QQ(int(s))
    return QQ(value)


def qq_str(x) -> str:
    """Serialize a rational as 'p/q' (or 'p' when integral)."""
    x = QQ(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_square_rat(x) -> bool:
    """Exact test: is x the square of a rational?"""
    x = QQ(x)
    if x < 0:
        return False
    if x == 0:
        return True
    return _is_square_int(int(x.numerator)) and _is_square_int(int(x.denominator))


def sqrt_rat(x):
    """Exact rational square root; raises ValueError if x is not a square."""
    x = QQ(x)
    if not is_square_rat(x):
        raise ValueError(f"{x} is not a rational square")
    return QQ(_isqrt(int(x.numerator)), _isqrt(int(x.denominator)))


def _isqrt(n: int) -> int:
    import math

    return math.isqrt(n)


def _is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = _isqrt(n)
    return r * r == n
