"""Finite sums of GaussPoly terms in canonical form.

Canonicalization
----------------
Terms with equal ``(a, b, c)`` whose amplitude ratio lies in Q+iQ are merged
into one term.  Each surviving term is then normalised so that its
polynomial is monic; the leading coefficient moves into the amplitude.
Terms are sorted by ``(c, b, a)`` and then by amplitude.

This makes dataclass equality coincide with equality of functions: for
rational parameters ``exp(-a)`` is transcendental unless ``a == 0``, and
square roots from distinct square classes of Q+iQ are linearly independent
over Q+iQ, so two distinct canonical forms never denote the same function.
Terms with equal exponents but non-mergeable amplitudes (``sqrt(2)`` next to
``1``) simply coexist.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import poly as gp
from . import quad as gq
from . import scalars as sc
from .errors import DivergentIntegralError
from .poly import GaussPoly, Poly
from .quad import GaussQuad
from .scalars import ComplexRational, as_complex


def _term_key(t: GaussPoly):
    g = t.g
    return (
        g.c.sort_key(),
        g.b.sort_key(),
        g.a.sort_key(),
        g.amp.square.sort_key(),
        g.amp.negate,
        tuple(c.sort_key() for c in t.p.coeffs),
    )


def _amp_ratio(base: sc.Amplitude, other: sc.Amplitude):
    """``r`` in Q+iQ with ``base * r == other``, or None."""
    r = sc.complex_rational_sqrt(other.square / base.square)
    if r is None:
        return None
    if sc.amp_mul(base, sc.amp_from_scalar(r)) != other:
        r = -r
    return r


def _monic(g: GaussQuad, p: Poly) -> GaussPoly:
    lead = p.lead()
    if lead == 1:
        return GaussPoly(g, p)
    amp = sc.amp_mul(g.amp, sc.amp_from_scalar(lead))
    return GaussPoly(GaussQuad(amp, g.a, g.b, g.c), p * (1 / lead))


def canonicalize(terms: Iterable[GaussPoly]) -> tuple:
    groups = {}
    for t in terms:
        if t.is_zero():
            continue
        key = (t.g.a, t.g.b, t.g.c)
        classes = groups.setdefault(key, [])
        for cls in classes:
            r = _amp_ratio(cls[0], t.g.amp)
            if r is not None:
                cls[1] = cls[1] + t.p * r
                break
        else:
            classes.append([t.g.amp, t.p])
    out = []
    for (a, b, c), classes in groups.items():
        for amp, p in classes:
            if p.is_zero():
                continue
            out.append(_monic(GaussQuad(amp, a, b, c), p))
    out.sort(key=_term_key)
    return tuple(out)


@dataclass(frozen=True)
class GaussMix:
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", canonicalize(self.terms))

    @classmethod
    def of(cls, *items):
        return cls(tuple(_as_term(x) for x in items))

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other):
        return add(self, other)

    def __str__(self):
        return render(self)


def _as_term(x) -> GaussPoly:
    if isinstance(x, GaussPoly):
        return x
    if isinstance(x, GaussQuad):
        return gp.lift(x)
    raise TypeError(f"cannot use {type(x).__name__} as a mixture term")


def mix(*items) -> GaussMix:
    """Build a mixture from GaussQuad, GaussPoly or GaussMix values."""
    terms = []
    for x in items:
        if isinstance(x, GaussMix):
            terms.extend(x.terms)
        else:
            terms.append(_as_term(x))
    return GaussMix(tuple(terms))


ZERO = GaussMix()
ONE = GaussMix.of(gq.ONE_SIGNAL)
# the identity function u = sqrt(pi)*t as a signal
ID = GaussMix.of(gp.phi(gq.ONE_SIGNAL, (0, 1)))


def render_term(t: GaussPoly) -> str:
    if t.p.degree == 0 and t.p[0] == 1:
        return str(t.g)
    return str(t)


def render(x: GaussMix) -> str:
    if x.is_zero():
        return "zero"
    return " + ".join(render_term(t) for t in x.terms)


def struct_eq(x: GaussMix, y: GaussMix) -> bool:
    return x.terms == y.terms


# lifted operations ------------------------------------------------------


def _termwise(op, x: GaussMix) -> GaussMix:
    out = []
    for idx, t in enumerate(x.terms):
        try:
            out.append(op(t))
        except DivergentIntegralError as exc:
            raise DivergentIntegralError(f"term {idx}: {exc}") from exc
    return GaussMix(tuple(out))


def _pairwise(op, x: GaussMix, y: GaussMix) -> GaussMix:
    out = []
    for i, s in enumerate(x.terms):
        for j, t in enumerate(y.terms):
            try:
                out.append(op(s, t))
            except DivergentIntegralError as exc:
                raise DivergentIntegralError(f"terms ({i}, {j}): {exc}") from exc
    return GaussMix(tuple(out))


def add(x: GaussMix, y: GaussMix) -> GaussMix:
    return GaussMix(x.terms + y.terms)


def neg(x: GaussMix) -> GaussMix:
    return scale(-1, x)


def sub(x: GaussMix, y: GaussMix) -> GaussMix:
    return add(x, neg(y))


def scale(k, x: GaussMix) -> GaussMix:
    k = as_complex(k)
    return _termwise(lambda t: gp.scale(k, t), x)


def translate(k, x: GaussMix) -> GaussMix:
    return _termwise(lambda t: gp.translate(k, t), x)


def modulate(k, x: GaussMix) -> GaussMix:
    return _termwise(lambda t: gp.modulate(k, t), x)


def shrink(k, x: GaussMix) -> GaussMix:
    return _termwise(lambda t: gp.shrink(k, t), x)


def conjugate(x: GaussMix) -> GaussMix:
    return _termwise(gp.conjugate, x)


def adjoint(x: GaussMix) -> GaussMix:
    return _termwise(gp.adjoint, x)


def differentiate(x: GaussMix) -> GaussMix:
    return _termwise(gp.differentiate, x)


def fourier_analysis(x: GaussMix) -> GaussMix:
    return _termwise(gp.fourier_analysis, x)


def fourier_synthesis(x: GaussMix) -> GaussMix:
    return _termwise(gp.fourier_synthesis, x)


def mul(x: GaussMix, y: GaussMix) -> GaussMix:
    return _pairwise(gp.mul, x, y)


def convolve(x: GaussMix, y: GaussMix) -> GaussMix:
    return _pairwise(gp.convolve, x, y)


def pow(x: GaussMix, n: int) -> GaussMix:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"power needs a non-negative integer exponent, got {n!r}")
    out = ONE
    for _ in range(n):
        out = mul(out, x)
    return out


# functionals --------------------------------------------------------------


def total_integral(t: GaussPoly):
    """``integral of t over R`` at the current mpmath precision."""
    import mpmath

    if t.is_zero():
        return mpmath.mpc(0)
    res = gp.integrate(t)
    g = t.g
    a, b, c = (_mpc(v) for v in (g.a, g.b, g.c))
    return _mpc(res.remainder_s) * g.amp.value() * mpmath.exp(-a + b * b / (4 * c)) / mpmath.sqrt(c)


def integral(x: GaussMix):
    import mpmath

    total = mpmath.mpc(0)
    for idx, t in enumerate(x.terms):
        try:
            total += total_integral(t)
        except DivergentIntegralError as exc:
            raise DivergentIntegralError(f"term {idx}: {exc}") from exc
    return total


def scalar_product(x: GaussMix, y: GaussMix, precision_bits: int = 128):
    """``integral of x * conj(y)`` from closed-form term integrals."""
    import mpmath

    with mpmath.workprec(precision_bits):
        return +integral(mul(x, conjugate(y)))


def _mpc(z: ComplexRational):
    import mpmath

    return mpmath.mpc(
        mpmath.mpf(z.re.numerator) / z.re.denominator,
        mpmath.mpf(z.im.numerator) / z.im.denominator,
    )
