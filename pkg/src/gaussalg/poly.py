"""Gaussians multiplied by polynomials in ``u = sqrt(pi)*t``.

``GaussPoly(g, p)`` denotes ``g(t) * sum(p[j] * u**j)``.  The derivative used
throughout is the scaled one, ``D = (1/sqrt(pi)) d/dt``, which keeps every
polynomial coefficient in Q+iQ::

    D(g * p) = g * (p' - (b + 2*c*u) * p)

where ``p'`` is the formal derivative in ``u``.

A GaussPoly is not canonical: ``(amp, p)`` and ``(amp*r, p/r)`` denote the
same function.  Compare through :mod:`gaussalg.mix`, whose canonical form
resolves this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import quad as gq
from .errors import DivergentIntegralError, UnsupportedDomainError
from .quad import GaussQuad
from .scalars import ComplexRational, as_complex, as_rational, format_complex

_I = ComplexRational(0, 1)
ZERO_C = ComplexRational(0)


@dataclass(frozen=True)
class Poly:
    """Coefficients of ``u**0, u**1, ...`` without trailing zeros."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [as_complex(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs):
        return cls(tuple(coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def lead(self):
        return self.coeffs[-1]

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, v in enumerate(b):
            out[j] = out[j] + v
        return Poly(tuple(out))

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            k = as_complex(other)
            return Poly(tuple(c * k for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO_C] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def derivative(self):
        return Poly(tuple(j * c for j, c in enumerate(self.coeffs) if j))

    def shift(self, k):
        """``q(u) = p(u - k)`` via Horner's scheme."""
        k = as_complex(k)
        out = Poly()
        lin = Poly((-k, 1))
        for c in reversed(self.coeffs):
            out = out * lin + Poly((c,))
        return out

    def dilate(self, k):
        """``q(u) = p(k*u)``."""
        k = as_complex(k)
        out = []
        f = ComplexRational(1)
        for c in self.coeffs:
            out.append(c * f)
            f = f * k
        return Poly(tuple(out))

    def conjugate(self):
        return Poly(tuple(c.conjugate() for c in self.coeffs))

    def __str__(self):
        return "[" + ", ".join(format_complex(c) for c in self.coeffs) + "]"


ONE_POLY = Poly((1,))
ID_POLY = Poly((0, 1))


@dataclass(frozen=True)
class GaussPoly:
    g: GaussQuad
    p: Poly = ONE_POLY

    def __post_init__(self):
        p = self.p if isinstance(self.p, Poly) else Poly(tuple(self.p))
        g = self.g
        if p.is_zero() or g.is_zero():
            g, p = gq.ZERO_SIGNAL, Poly()
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "p", p)

    def is_zero(self):
        return self.p.is_zero()

    def __str__(self):
        g = self.g
        neg = ", neg=true" if g.amp.negate else ""
        return (
            f"gausspoly(y={format_complex(g.amp.square)}{neg}, a={format_complex(g.a)}, "
            f"b={format_complex(g.b)}, c={format_complex(g.c)}, p={self.p})"
        )


ZERO = GaussPoly(gq.ZERO_SIGNAL, Poly())


def phi(g: GaussQuad, p: Sequence = (1,)) -> GaussPoly:
    return GaussPoly(g, p if isinstance(p, Poly) else Poly(tuple(p)))


def lift(g: GaussQuad) -> GaussPoly:
    return GaussPoly(g, ONE_POLY)


@dataclass(frozen=True)
class IntegralResult:
    """``x == s*f + D(f*q)`` for the Gaussian core ``f`` of ``x``."""

    remainder_s: ComplexRational
    q: Poly

    def __str__(self):
        return f"integral(s={format_complex(self.remainder_s)}, q={self.q})"


# lifted operations ------------------------------------------------------


def translate(k, x: GaussPoly) -> GaussPoly:
    k = as_rational(k)
    return GaussPoly(gq.translate(k, x.g), x.p.shift(k))


def modulate(k, x: GaussPoly) -> GaussPoly:
    return GaussPoly(gq.modulate(k, x.g), x.p)


def scale(k, x: GaussPoly) -> GaussPoly:
    return GaussPoly(gq.scale(k, x.g), x.p)


def shrink(k, x: GaussPoly) -> GaussPoly:
    k = as_rational(k)
    return GaussPoly(gq.shrink(k, x.g), x.p.dilate(k))


def conjugate(x: GaussPoly) -> GaussPoly:
    return GaussPoly(gq.conjugate(x.g), x.p.conjugate())


def adjoint(x: GaussPoly) -> GaussPoly:
    return shrink(-1, conjugate(x))


def mul(x: GaussPoly, y: GaussPoly) -> GaussPoly:
    return GaussPoly(gq.mul(x.g, y.g), x.p * y.p)


def pow(x: GaussPoly, n: int) -> GaussPoly:
    return GaussPoly(gq.pow(x.g, n), x.p**n)


# calculus -----------------------------------------------------------------


def _derive(g: GaussQuad, p: Poly) -> Poly:
    return p.derivative() - Poly((g.b, 2 * g.c)) * p


def differentiate(x: GaussPoly) -> GaussPoly:
    """Scaled derivative ``(1/sqrt(pi)) * x'``."""
    if x.is_zero():
        return x
    return GaussPoly(x.g, _derive(x.g, x.p))


def fourier_analysis(x: GaussPoly) -> GaussPoly:
    """Kernel ``exp(-2*pi*i*tau*t)``; recursion over the coefficient list.

    ``FA(g*(s + u*p)) = s*FA(g) + (i/2) * D(FA(g*p))``.
    """
    if x.is_zero():
        return x
    core = gq.fourier_analysis(x.g)
    half_i = _I / 2
    out = Poly()
    for s in reversed(x.p.coeffs):
        out = Poly((s,)) + _derive(core, out) * half_i
    return GaussPoly(core, out)


def fourier_synthesis(x: GaussPoly) -> GaussPoly:
    """Kernel ``exp(+2*pi*i*tau*t)``."""
    return fourier_analysis(shrink(-1, x))


def convolve(x: GaussPoly, y: GaussPoly) -> GaussPoly:
    """Needs only ``Re(c0 + c1) > 0``, so chirps with ``Re(c) == 0`` are fine.

    The core is the core convolution; the polynomial comes from peeling
    derivatives off each factor (``D`` commutes with convolution).
    """
    if x.is_zero() or y.is_zero():
        return ZERO
    core = gq.convolve(x.g, y.g)
    return GaussPoly(core, _conv_poly(x.g, x.p, y.g, y.p, core))


def _conv_poly(f: GaussQuad, p: Poly, h: GaussQuad, q: Poly, core: GaussQuad) -> Poly:
    if p.is_zero() or q.is_zero():
        return Poly()
    if p.degree == 0 and q.degree == 0:
        return Poly((p[0] * q[0],))
    if p.degree > 0 and f.c:
        s, r = _split(f.b, f.c, p)
        return _conv_poly(f, Poly((s,)), h, q, core) + _derive(core, _conv_poly(f, r, h, q, core))
    if q.degree > 0 and h.c:
        s, r = _split(h.b, h.c, q)
        return _conv_poly(f, p, h, Poly((s,)), core) + _derive(core, _conv_poly(f, p, h, r, core))
    # a polynomial on a side with c == 0: move one power of u across,
    # using (u*a)*b == u*(a*b) - a*(u*b)
    if p.degree > 0:
        rest = Poly(p.coeffs[1:])
        return (
            _conv_poly(f, Poly((p[0],)), h, q, core)
            + ID_POLY * _conv_poly(f, rest, h, q, core)
            - _conv_poly(f, rest, h, ID_POLY * q, core)
        )
    return _conv_poly(h, q, f, p, core)


def _split(b, c, p: Poly):
    """``(s, q)`` with ``g*p == s*g + D(g*q)`` for a core with parameters ``b, c``."""
    p = p.coeffs
    n = len(p) - 1
    q = [ZERO_C] * (n + 1)  # q[n] stays zero, used as padding
    two_c = 2 * c
    # coefficient of u**j:  p_j = (j+1) q_{j+1} - b q_j - 2c q_{j-1}
    for j in range(n, 0, -1):
        nxt = q[j + 1] if j + 1 <= n else ZERO_C
        q[j - 1] = ((j + 1) * nxt - b * q[j] - p[j]) / two_c
    q1 = q[1] if n >= 1 else ZERO_C
    return p[0] - q1 + b * q[0], Poly(tuple(q[:n]))


def integrate(x: GaussPoly) -> IntegralResult:
    """Split ``x`` into ``s*f + D(f*q)``.

    ``q`` is solved from its leading coefficient downwards; the remaining
    constant is ``s``.  The antiderivative of the ``s*f`` part needs erf and
    is only available numerically (see :mod:`gaussalg.numeric`).
    """
    if x.is_zero():
        return IntegralResult(ZERO_C, Poly())
    b, c = x.g.b, x.g.c
    if not c:
        raise UnsupportedDomainError("antiderivative of an exponential envelope (c = 0)")
    if c.re <= 0:
        raise DivergentIntegralError(f"divergent: Re(c) <= 0 (c = {format_complex(c)})")
    s, q = _split(b, c, x.p)
    return IntegralResult(s, q)


def hermite_eigenfunction(n: int) -> GaussPoly:
    """``D**n(exp(-2*pi*t**2)) * exp(pi*t**2)``, eigenvalue ``(-i)**n``."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"hermite index must be a non-negative integer, got {n!r}")
    x = lift(gq.gauss(1, 0, 0, 2))
    for _ in range(n):
        x = differentiate(x)
    return mul(x, lift(gq.gauss(1, 0, 0, -1)))
