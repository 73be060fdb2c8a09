"""Centred real Gaussians ``f(y, c)(t) = sqrt(y) * exp(-pi*c*t**2)``.

All operations are exact maps on the rational pair ``(y, c)``.  Norms and
the variance leave Q; they are returned as :class:`NormValue`, the closed
form ``mantissa**(1/root_degree) * pi**pi_exponent``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivergentIntegralError, DomainError
from .scalars import format_rational

INF = "inf"


@dataclass(frozen=True)
class SimpleGauss:
    y: Fraction
    c: Fraction = Fraction(0)

    def __post_init__(self):
        y, c = Fraction(self.y), Fraction(self.c)
        if y < 0:
            raise DomainError(f"amplitude square must be non-negative, got {y}")
        if not y:
            c = Fraction(0)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "c", c)

    def is_zero(self):
        return not self.y

    def __str__(self):
        return f"gauss(y={format_rational(self.y)}, c={format_rational(self.c)})"


@dataclass(frozen=True)
class NormValue:
    """``mantissa**(1/root_degree) * pi**pi_exponent``."""

    mantissa: Fraction
    root_degree: int = 1
    pi_exponent: int = 0

    def __post_init__(self):
        m = Fraction(self.mantissa)
        if m < 0:
            raise DomainError("NormValue mantissa must be non-negative")
        if self.root_degree < 1:
            raise DomainError("NormValue root degree must be positive")
        object.__setattr__(self, "mantissa", m)

    def value(self):
        import mpmath

        m = mpmath.mpf(self.mantissa.numerator) / self.mantissa.denominator
        return mpmath.root(m, self.root_degree) * mpmath.pi ** self.pi_exponent

    def __float__(self):
        return float(self.value())

    def __str__(self):
        return f"root({format_rational(self.mantissa)}, {self.root_degree})*pi^{self.pi_exponent}"


def scale(k, x: SimpleGauss) -> SimpleGauss:
    k = Fraction(k)
    if k < 0:
        raise DomainError(
            "negative scaling leaves the simple class; use gaussalg.quad.scale"
        )
    return SimpleGauss(x.y * k * k, x.c)


def shrink(k, x: SimpleGauss) -> SimpleGauss:
    k = Fraction(k)
    if not k:
        raise DomainError("shrinking by 0 collapses the time axis")
    return SimpleGauss(x.y, x.c * k * k)


def conjugate(x: SimpleGauss) -> SimpleGauss:
    return x


def mul(x: SimpleGauss, y: SimpleGauss) -> SimpleGauss:
    return SimpleGauss(x.y * y.y, x.c + y.c)


def pow(x: SimpleGauss, n: int) -> SimpleGauss:
    # real exponents would take y out of Q
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"power needs a non-negative integer exponent, got {n!r}")
    return SimpleGauss(x.y**n, n * x.c)


def convolve(x: SimpleGauss, y: SimpleGauss) -> SimpleGauss:
    s = x.c + y.c
    if s <= 0:
        raise DivergentIntegralError(f"divergent: c0+c1 = {format_rational(s)} <= 0")
    return SimpleGauss(x.y * y.y / s, x.c * y.c / s)


def fourier(x: SimpleGauss) -> SimpleGauss:
    """Fourier transform; analysis and synthesis coincide on even functions."""
    if x.c <= 0:
        raise DivergentIntegralError(f"divergent: c = {format_rational(x.c)} <= 0")
    return SimpleGauss(x.y / x.c, 1 / x.c)


def norm(p, x: SimpleGauss) -> NormValue:
    """L^p norm for a positive integer ``p`` or ``p == "inf"``."""
    if p == INF or p == float("inf"):
        return NormValue(x.y, 2, 0)
    if not isinstance(p, int) or p < 1:
        raise DomainError(f"norm order must be a positive integer or inf, got {p!r}")
    if x.is_zero():
        return NormValue(0, 2 * p, 0)
    if x.c <= 0:
        raise DivergentIntegralError(f"divergent: L{p} norm needs c > 0")
    return NormValue(x.y**p / (p * x.c), 2 * p, 0)


def variance(x: SimpleGauss) -> NormValue:
    if x.is_zero():
        raise DomainError("variance of the zero signal is undefined")
    if x.c <= 0:
        raise DivergentIntegralError("divergent: variance needs c > 0")
    return NormValue(1 / (2 * x.c), 1, -1)
