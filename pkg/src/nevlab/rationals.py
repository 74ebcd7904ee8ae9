"""Exact scalar arithmetic: rationals and Gaussian rationals.

gmpy2.mpq is used when present (it is much faster in elimination-heavy
work); fractions.Fraction is the fallback.  The two back ends compare and
hash identically for equal values, so everything downstream is agnostic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Union

try:
    from gmpy2 import mpq as _mpq

    def rational(a: Union[int, str, Fraction, Any] = 0, b: Union[int, None] = None):
        return _mpq(a) if b is None else _mpq(a, b)

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    def rational(a=0, b=None):
        return Fraction(a) if b is None else Fraction(a, b)

    HAVE_GMPY2 = False

Q_ZERO = rational(0)
Q_ONE = rational(1)


def parse_rational(text: str):
    """Parse 'p', 'p/q' or a decimal string into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return rational(int(num), int(den))
    if "." in text or "e" in text or "E" in text:
        return rational(Fraction(text))
    return rational(int(text))


class GaussianRational:
    """An exact complex number a + bi with rational a, b.

    Immutable and hashable, so it can key dictionaries (the expression
    layer relies on this).  Division by zero raises ZeroDivisionError.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is type(Q_ZERO) else rational(re))
        object.__setattr__(self, "im", im if type(im) is type(Q_ZERO) else rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c, Q_ZERO)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c, d = other.re, other.im
        n = c * c + d * d
        if not n:
            raise ZeroDivisionError("division by zero GaussianRational")
        a, b = self.re, self.im
        return GaussianRational((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = GR_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    # -- predicates and conversions ----------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def is_real(self) -> bool:
        return not self.im

    def sort_key(self):
        """Total order used only for deterministic output, not algebra."""
        return (self.re, self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = self.im
        im_txt = "i" if im == 1 else ("-i" if im == -1 else f"{im}i")
        if not self.re:
            return im_txt
        sign = "-" if im < 0 else "+"
        mag = -im if im < 0 else im
        mag_txt = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{mag_txt}"


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)) or type(value) is type(Q_ZERO):
        return GaussianRational(value)
    return NotImplemented


def gauss(re=0, im=0) -> GaussianRational:
    """Build a GaussianRational from ints, Fractions or 'p/q' strings."""
    if isinstance(re, GaussianRational):
        if im:
            return re + GaussianRational(0, parse_rational(str(im)) if isinstance(im, str) else im)
        return re
    if isinstance(re, str):
        re = parse_rational(re)
    if isinstance(im, str):
        im = parse_rational(im)
    return GaussianRational(re, im)


GR_ZERO = GaussianRational(0, 0)
GR_ONE = GaussianRational(1, 0)
GR_I = GaussianRational(0, 1)
