"""Translated, modulated and chirped Gaussians.

A :class:`GaussQuad` with parameters ``(amp, a, b, c)`` denotes::

    amp * exp(-(a + b*u + c*u**2)),   u = sqrt(pi) * t

``amp`` is a branch-tracked square root (:class:`~gaussalg.scalars.Amplitude`)
and ``a``, ``b``, ``c`` are Gaussian rationals.  Time shifts and frequency
shifts are measured in units of ``1/sqrt(pi)``: ``translate(k, x)`` delays
by ``k/sqrt(pi)`` and ``modulate(k, x)`` multiplies by
``exp(2*pi*i*(k/sqrt(pi))*t)``.  In these units every update stays rational.

Within rational parameters distinct tuples denote distinct functions, so
dataclass equality is semantic equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import scalars as sc
from .errors import DivergentIntegralError, DomainError
from .scalars import ZERO, Amplitude, ComplexRational, as_complex, as_rational, format_complex

__all__ = [
    "GaussQuad",
    "gauss",
    "translate",
    "modulate",
    "scale",
    "shrink",
    "conjugate",
    "adjoint",
    "mul",
    "pow",
    "convolve",
    "fourier_analysis",
    "fourier_synthesis",
    "is_chirplet",
    "CHIRP_UP",
    "CHIRP_DOWN",
]

_I = ComplexRational(0, 1)


@dataclass(frozen=True)
class GaussQuad:
    amp: Amplitude
    a: ComplexRational = ZERO
    b: ComplexRational = ZERO
    c: ComplexRational = ZERO

    def __post_init__(self):
        amp = self.amp if isinstance(self.amp, Amplitude) else Amplitude(self.amp)
        object.__setattr__(self, "amp", amp)
        if amp.is_zero():
            for name in ("a", "b", "c"):
                object.__setattr__(self, name, ZERO)
        else:
            for name in ("a", "b", "c"):
                object.__setattr__(self, name, as_complex(getattr(self, name)))

    @property
    def y(self):
        return self.amp.square

    def is_zero(self):
        return self.amp.is_zero()

    def __str__(self):
        neg = ", neg=true" if self.amp.negate else ""
        return (
            f"gauss(y={format_complex(self.amp.square)}{neg}, a={format_complex(self.a)}, "
            f"b={format_complex(self.b)}, c={format_complex(self.c)})"
        )


def gauss(y=1, a=0, b=0, c=0, negate=False) -> GaussQuad:
    """Convenience constructor, ``gauss(1, 0, 0, 1)`` is ``exp(-pi*t**2)``."""
    return GaussQuad(Amplitude(as_complex(y), negate), as_complex(a), as_complex(b), as_complex(c))


ZERO_SIGNAL = GaussQuad(Amplitude(ZERO))
ONE_SIGNAL = gauss(1, 0, 0, 0)
# exp(-i*pi*t**2) and exp(+i*pi*t**2)
CHIRP_UP = gauss(1, 0, 0, _I)
CHIRP_DOWN = gauss(1, 0, 0, -_I)


def translate(k, x: GaussQuad) -> GaussQuad:
    k = as_rational(k)
    if x.is_zero():
        return x
    return GaussQuad(x.amp, x.a - x.b * k + x.c * k * k, x.b - 2 * x.c * k, x.c)


def modulate(k, x: GaussQuad) -> GaussQuad:
    k = as_rational(k)
    if x.is_zero():
        return x
    return GaussQuad(x.amp, x.a, x.b - ComplexRational(0, 2 * k), x.c)


def scale(k, x: GaussQuad) -> GaussQuad:
    k = as_complex(k)
    if not k:
        return ZERO_SIGNAL
    return GaussQuad(sc.amp_mul(x.amp, sc.amp_from_scalar(k)), x.a, x.b, x.c)


def shrink(k, x: GaussQuad) -> GaussQuad:
    k = as_rational(k)
    if not k:
        raise DomainError("shrinking by 0 collapses the time axis")
    return GaussQuad(x.amp, x.a, x.b * k, x.c * k * k)


def conjugate(x: GaussQuad) -> GaussQuad:
    # c is conjugated as well: it is complex for chirps
    return GaussQuad(x.amp.conjugate(), x.a.conjugate(), x.b.conjugate(), x.c.conjugate())


def adjoint(x: GaussQuad) -> GaussQuad:
    return shrink(-1, conjugate(x))


def mul(x: GaussQuad, y: GaussQuad) -> GaussQuad:
    amp = sc.amp_mul(x.amp, y.amp)
    return GaussQuad(amp, x.a + y.a, x.b + y.b, x.c + y.c)


def pow(x: GaussQuad, n: int) -> GaussQuad:
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"power needs a non-negative integer exponent, got {n!r}")
    amp = Amplitude.one()
    for _ in range(n):
        amp = sc.amp_mul(amp, x.amp)
    return GaussQuad(amp, x.a * n, x.b * n, x.c * n)


def convolve(x: GaussQuad, y: GaussQuad) -> GaussQuad:
    if x.is_zero() or y.is_zero():
        return ZERO_SIGNAL
    s = x.c + y.c
    if s.re <= 0:
        raise DivergentIntegralError(
            f"divergent: Re(c0+c1) <= 0 (c0 = {format_complex(x.c)}, c1 = {format_complex(y.c)})"
        )
    inv = 1 / s
    db = x.b - y.b
    amp = sc.amp_mul(sc.amp_mul(x.amp, y.amp), Amplitude(inv))
    return GaussQuad(
        amp,
        x.a + y.a - db * db * inv / 4,
        (x.b * y.c + y.b * x.c) * inv,
        x.c * y.c * inv,
    )


def fourier_analysis(x: GaussQuad) -> GaussQuad:
    """Transform with kernel ``exp(-2*pi*i*tau*t)``."""
    if x.is_zero():
        return x
    if x.c.re <= 0:
        raise DivergentIntegralError(f"divergent: Re(c) <= 0 (c = {format_complex(x.c)})")
    inv = 1 / x.c
    amp = sc.amp_mul(x.amp, Amplitude(inv))
    return GaussQuad(amp, x.a - x.b * x.b * inv / 4, -_I * x.b * inv, inv)


def fourier_synthesis(x: GaussQuad) -> GaussQuad:
    """Transform with kernel ``exp(+2*pi*i*tau*t)``."""
    return fourier_analysis(shrink(-1, x))


def is_chirplet(x: GaussQuad) -> bool:
    return x.c.re > 0
