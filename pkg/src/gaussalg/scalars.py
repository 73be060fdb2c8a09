"""Exact scalars: rationals, Gaussian rationals and branch-tracked square roots.

Rationals are :class:`fractions.Fraction`.  :class:`ComplexRational` is an
element of Q+iQ.  :class:`Amplitude` denotes ``(-1)**negate * sqrt(square)``
where ``sqrt`` is the principal square root (positive real part, or
non-negative imaginary part when the real part vanishes).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .errors import DomainError

__all__ = [
    "Fraction",
    "ComplexRational",
    "Amplitude",
    "upper",
    "amp_mul",
    "amp_from_scalar",
    "rational_sqrt",
    "complex_rational_sqrt",
    "as_rational",
    "as_complex",
    "format_rational",
    "parse_rational",
    "parse_complex",
]

Scalar = Union[int, Fraction, "ComplexRational"]


class ComplexRational:
    """Immutable Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    @staticmethod
    def _new(re, im):
        z = object.__new__(ComplexRational)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    def __reduce__(self):
        return (ComplexRational, (self.re, self.im))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational._new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ComplexRational._new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return ComplexRational._new(a * c, b)
        return ComplexRational._new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return ComplexRational._new(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        d = self.re * self.re + self.im * self.im
        if not d:
            raise ZeroDivisionError("inverse of zero")
        return ComplexRational._new(self.re / d, -self.im / d)

    def conjugate(self):
        return ComplexRational._new(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self):
        return not self.im

    def sort_key(self):
        return (self.re, self.im)

    # conversion ---------------------------------------------------------

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexRational({format_complex(self)!r})"

    def __str__(self):
        return format_complex(self)


def _coerce(x):
    if type(x) is ComplexRational:
        return x
    if isinstance(x, (int, Fraction)):
        return ComplexRational._new(Fraction(x), Fraction(0))
    return NotImplemented


ZERO = ComplexRational(0)
ONE = ComplexRational(1)
I = ComplexRational(0, 1)


def as_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction; complex values with nonzero imaginary part are rejected."""
    if isinstance(x, ComplexRational):
        if x.im:
            raise DomainError(f"expected a rational number, got {x}")
        return x.re
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def as_complex(x) -> ComplexRational:
    if isinstance(x, ComplexRational):
        return x
    if isinstance(x, (int, Fraction)):
        return ComplexRational(x)
    if isinstance(x, str):
        return parse_complex(x)
    raise TypeError(f"cannot interpret {x!r} as a complex rational")


# square roots ---------------------------------------------------------------


def rational_sqrt(q) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None if it is irrational."""
    q = Fraction(q)
    if q < 0:
        raise DomainError(f"square root of negative rational {q}")
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def complex_rational_sqrt(z) -> Optional[ComplexRational]:
    """Some ``r`` in Q+iQ with ``r*r == z``, or None when no such ``r`` exists."""
    z = as_complex(z)
    x, y = z.re, z.im
    if not y:
        if x >= 0:
            r = rational_sqrt(x)
            return None if r is None else ComplexRational(r)
        r = rational_sqrt(-x)
        return None if r is None else ComplexRational(0, r)
    n = rational_sqrt(x * x + y * y)
    if n is None:
        return None
    re = rational_sqrt((n + x) / 2)
    im = rational_sqrt((n - x) / 2)
    if re is None or im is None:
        return None
    if y < 0:
        im = -im
    return ComplexRational(re, im)


def upper(c) -> bool:
    """True when ``c`` lies in the upper half plane or on the negative real axis."""
    c = as_complex(c)
    return c.im > 0 or (c.im == 0 and c.re < 0)


@dataclass(frozen=True)
class Amplitude:
    """A signed principal square root ``(-1)**negate * sqrt(square)``."""

    square: ComplexRational
    negate: bool = False

    def __post_init__(self):
        sq = as_complex(self.square)
        object.__setattr__(self, "square", sq)
        if not sq and self.negate:
            object.__setattr__(self, "negate", False)

    @classmethod
    def one(cls):
        return cls(ONE)

    @classmethod
    def zero(cls):
        return cls(ZERO)

    def is_zero(self):
        return not self.square

    def __bool__(self):
        return bool(self.square)

    def conjugate(self):
        # conj(sqrt(s)) == sqrt(conj(s)) except on the negative real axis
        s = self.square
        cut = s.im == 0 and s.re < 0
        return Amplitude(s.conjugate(), self.negate ^ cut)

    def __neg__(self):
        return Amplitude(self.square, not self.negate)

    def __mul__(self, other):
        if isinstance(other, Amplitude):
            return amp_mul(self, other)
        return NotImplemented

    def value(self):
        """Denoted value at the current mpmath precision."""
        import mpmath

        s = self.square
        root = mpmath.sqrt(mpmath.mpc(_mpf(s.re), _mpf(s.im)))
        return -root if self.negate else root

    def __str__(self):
        return ("-" if self.negate else "+") + f"sqrt({format_complex(self.square)})"


def _mpf(q: Fraction):
    import mpmath

    return mpmath.mpf(q.numerator) / q.denominator


def amp_mul(x: Amplitude, y: Amplitude) -> Amplitude:
    """Product of two amplitudes with the branch-flip correction.

    ``sqrt(c0)*sqrt(c1) == (-1)**k * sqrt(c0*c1)`` where ``k`` is 1 exactly
    when both factors and the product disagree about lying in the upper
    half plane.
    """
    product = x.square * y.square
    if not product:
        return Amplitude(ZERO)
    ux, uy, up = upper(x.square), upper(y.square), upper(product)
    k = (ux and uy and not up) or (not ux and not uy and up)
    return Amplitude(product, x.negate ^ y.negate ^ k)


def amp_from_scalar(k) -> Amplitude:
    """The amplitude whose denoted value equals ``k`` exactly."""
    k = as_complex(k)
    return Amplitude(k * k, k.re < 0 or (k.re == 0 and k.im < 0))


# text forms -----------------------------------------------------------------


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_complex(z) -> str:
    z = as_complex(z)
    if not z.im:
        return format_rational(z.re)
    im = z.im
    if abs(im) == 1:
        im_text = "-i" if im < 0 else "i"
    else:
        im_text = format_rational(im) + "i"
    if not z.re:
        return im_text
    sign = "" if im_text.startswith("-") else "+"
    return f"{format_rational(z.re)}{sign}{im_text}"


_RAT = r"\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(rf"^\s*([+-]?)\s*({_RAT})\s*$")
_TERM_RE = re.compile(rf"([+-]?)\s*({_RAT})?\s*(i?)")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(m.group(2))
    return -value if m.group(1) == "-" else value


def parse_complex(text: str) -> ComplexRational:
    """Parse ``"p/q"``, ``"r/si"``, ``"p/q+r/si"``, ``"-i"`` and similar forms."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    re_part = Fraction(0)
    im_part = Fraction(0)
    pos = 0
    seen = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and not m.group(3)):
            raise ValueError(f"not a complex literal: {text!r}")
        if seen and not m.group(1):
            raise ValueError(f"not a complex literal: {text!r}")
        value = Fraction(m.group(2)) if m.group(2) is not None else Fraction(1)
        if m.group(1) == "-":
            value = -value
        if m.group(3):
            im_part += value
        else:
            re_part += value
        pos = m.end()
        seen += 1
    if seen > 2:
        raise ValueError(f"not a complex literal: {text!r}")
    return ComplexRational(re_part, im_part)
