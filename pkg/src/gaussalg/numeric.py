"""High-precision numeric semantics used as an oracle for the exact algebra.

Everything here runs on mpmath at ``EvalConfig.precision_bits``.  Nothing in
the exact modules depends on this one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath

from . import poly as gp
from .errors import DivergentIntegralError, DomainError
from .mix import GaussMix
from .poly import GaussPoly
from .quad import GaussQuad
from .simple import SimpleGauss


@dataclass(frozen=True)
class EvalConfig:
    precision_bits: int = 128
    tolerance: float = 1e-12
    truncation_sigma: float = 12.0

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be at least 64")
        if self.truncation_sigma <= 0:
            raise ValueError("truncation_sigma must be positive")


DEFAULT = EvalConfig()


@dataclass(frozen=True)
class SampleTable:
    times: tuple
    values: tuple

    def __post_init__(self):
        if len(self.times) != len(self.values):
            raise ValueError("times and values differ in length")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("times must be strictly increasing")

    def to_csv(self) -> str:
        lines = ["t,re,im"]
        for t, v in zip(self.times, self.values):
            v = complex(v)
            lines.append(f"{float(t)!r},{v.real!r},{v.imag!r}")
        return "\n".join(lines) + "\n"


def mpf(q) -> mpmath.mpf:
    if isinstance(q, Fraction):
        return mpmath.mpf(q.numerator) / q.denominator
    return mpmath.mpf(q)


def mpc(z) -> mpmath.mpc:
    return mpmath.mpc(mpf(z.re), mpf(z.im))


# pointwise evaluation ---------------------------------------------------------


def _terms(x) -> Sequence[GaussPoly]:
    if isinstance(x, GaussMix):
        return x.terms
    if isinstance(x, GaussPoly):
        return (x,)
    if isinstance(x, GaussQuad):
        return (gp.lift(x),)
    if isinstance(x, SimpleGauss):
        from .quad import gauss

        return (gp.lift(gauss(x.y, 0, 0, x.c)),)
    raise TypeError(f"cannot evaluate {type(x).__name__}")


class _CompiledTerm:
    __slots__ = ("amp", "a", "b", "c", "p")

    def __init__(self, t: GaussPoly):
        g = t.g
        self.amp = g.amp.value()
        self.a, self.b, self.c = mpc(g.a), mpc(g.b), mpc(g.c)
        self.p = [mpc(v) for v in reversed(t.p.coeffs)]

    def __call__(self, u):
        acc = mpmath.mpc(0)
        for v in self.p:
            acc = acc * u + v
        return self.amp * mpmath.exp(-(self.a + u * (self.b + self.c * u))) * acc


def compile_signal(x) -> Callable:
    """A callable ``t -> x(t)``; must be called under the precision it was built with."""
    terms = [_CompiledTerm(t) for t in _terms(x)]
    root_pi = mpmath.sqrt(mpmath.pi)

    def f(t):
        u = root_pi * t
        total = mpmath.mpc(0)
        for term in terms:
            total += term(u)
        return total

    return f


def eval_point(x, t, cfg: EvalConfig = DEFAULT):
    with mpmath.workprec(cfg.precision_bits):
        return +compile_signal(x)(mpf(t))


def sample(x, start, stop, n: int, cfg: EvalConfig = DEFAULT) -> SampleTable:
    if n < 2:
        raise ValueError("need at least two sample points")
    if not start < stop:
        raise ValueError("sample interval must have start < stop")
    with mpmath.workprec(cfg.precision_bits):
        f = compile_signal(x)
        times = [mpf(start) + (mpf(stop) - mpf(start)) * k / (n - 1) for k in range(n)]
        values = [f(t) for t in times]
    return SampleTable(tuple(times), tuple(values))


# envelopes --------------------------------------------------------------------


@dataclass(frozen=True)
class Envelope:
    """Gaussian decay bound ``exp(-(t-center)**2 / (2*sigma**2))``."""

    center: float
    sigma: float

    def __mul__(self, other):
        w1, w2 = self.sigma**-2, other.sigma**-2
        w = w1 + w2
        return Envelope((self.center * w1 + other.center * w2) / w, w**-0.5)

    def reflected(self, t):
        """Envelope of ``tau -> g(t - tau)`` when this one bounds ``g``."""
        return Envelope(t - self.center, self.sigma)


@dataclass(frozen=True)
class Window:
    lo: float
    hi: float
    sigma: float


def term_envelope(t: GaussPoly) -> Envelope:
    c = t.g.c
    if c.re <= 0:
        raise DivergentIntegralError(f"divergent: Re(c) <= 0 (c = {c})")
    re_b, re_c = float(t.g.b.re), float(c.re)
    center_u = -re_b / (2 * re_c)
    return Envelope(center_u / math.sqrt(math.pi), 1 / math.sqrt(2 * math.pi * re_c))


def window_of(x, cfg: EvalConfig = DEFAULT) -> Window:
    envs = []
    for idx, t in enumerate(_terms(x)):
        try:
            envs.append(term_envelope(t))
        except DivergentIntegralError as exc:
            raise DivergentIntegralError(f"term {idx}: {exc}") from exc
    return window_from(envs, cfg)


def window_from(envs: Sequence[Envelope], cfg: EvalConfig = DEFAULT) -> Window:
    if not envs:
        return Window(-1.0, 1.0, 1.0)
    s = cfg.truncation_sigma
    lo = min(e.center - s * e.sigma for e in envs)
    hi = max(e.center + s * e.sigma for e in envs)
    return Window(lo, hi, min(e.sigma for e in envs))


# quadrature -------------------------------------------------------------------


@lru_cache(maxsize=16)
def _gl_nodes(degree: int, prec: int):
    from mpmath.calculus.quadrature import GaussLegendre

    with mpmath.workprec(prec):
        return tuple(GaussLegendre(mpmath.mp).calc_nodes(degree, prec))


def _gl(f, a, b, nodes):
    half = (b - a) / 2
    mid = (a + b) / 2
    total = mpmath.mpc(0)
    for x, w in nodes:
        total += w * f(mid + half * x)
    return total * half


def _adaptive(f, a, b, tol, coarse, fine, depth=0):
    q1 = _gl(f, a, b, coarse)
    q2 = _gl(f, a, b, fine)
    err = abs(q2 - q1)
    if err <= tol or depth >= 30:
        return q2, err
    m = (a + b) / 2
    l, el = _adaptive(f, a, m, tol / 2, coarse, fine, depth + 1)
    r, er = _adaptive(f, m, b, tol / 2, coarse, fine, depth + 1)
    return l + r, el + er


def integrate_window(f: Callable, window: Window, cfg: EvalConfig = DEFAULT):
    """Adaptive composite Gauss-Legendre over ``window``; returns ``(value, error)``.

    Panels start one envelope width wide and are bisected until a 12-point
    and a 24-point rule agree.  A tail estimate from the edge values is
    added to the error.
    """
    with mpmath.workprec(cfg.precision_bits):
        coarse = _gl_nodes(3, cfg.precision_bits)
        fine = _gl_nodes(4, cfg.precision_bits)
        lo, hi = mpf(window.lo), mpf(window.hi)
        n_panels = max(1, math.ceil((window.hi - window.lo) / window.sigma))
        width = (hi - lo) / n_panels
        tol = mpf(cfg.tolerance) / 16
        total = mpmath.mpc(0)
        error = mpmath.mpf(0)
        for k in range(n_panels):
            v, e = _adaptive(f, lo + k * width, lo + (k + 1) * width, tol / n_panels, coarse, fine)
            total += v
            error += e
        tail = (abs(f(lo)) + abs(f(hi))) * mpf(window.sigma)
        return +total, +(error + tail)


def quadrature_estimate(integrand, cfg: EvalConfig = DEFAULT, envelope=None):
    """``(value, error_bound)`` of the integral over R.

    ``integrand`` is a signal (GaussMix, GaussPoly, GaussQuad, SimpleGauss),
    whose window follows from its terms, or a callable taking an mpf time
    together with ``envelope`` (an :class:`Envelope` or list of them).
    """
    if callable(integrand) and not isinstance(integrand, (GaussMix, GaussPoly, GaussQuad)):
        if envelope is None:
            raise DomainError("a callable integrand needs an explicit envelope")
        envs = [envelope] if isinstance(envelope, Envelope) else list(envelope)
        window = window_from(envs, cfg)
        return integrate_window(integrand, window, cfg)
    window = window_of(integrand, cfg)
    with mpmath.workprec(cfg.precision_bits):
        f = compile_signal(integrand)
        return integrate_window(f, window, cfg)


def quadrature(integrand, cfg: EvalConfig = DEFAULT, envelope=None):
    return quadrature_estimate(integrand, cfg, envelope)[0]


def envelopes(x) -> list:
    return [term_envelope(t) for t in _terms(x)]


# erf --------------------------------------------------------------------------


def erf_hp(z, cfg: EvalConfig = DEFAULT):
    """Real error function: Taylor series below ``|z| = 3``, continued fraction above."""
    with mpmath.workprec(cfg.precision_bits + 24):
        z = mpf(z)
        if z < 0:
            return -erf_hp(-z, cfg)
        if z < 3:
            result = _erf_series(z)
        else:
            result = 1 - _erfc_cf(z)
    with mpmath.workprec(cfg.precision_bits):
        return +result


def _erf_series(z):
    eps = mpmath.eps
    z2 = z * z
    term = z
    total = z
    n = 0
    while True:
        n += 1
        term = -term * z2 / n
        contrib = term / (2 * n + 1)
        total += contrib
        if abs(contrib) <= eps * abs(total):
            break
    return 2 * total / mpmath.sqrt(mpmath.pi)


def _erfc_cf(z):
    # erfc(z) = exp(-z^2)/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
    # evaluated with the modified Lentz method
    tiny = mpmath.mpf(2) ** (-mpmath.mp.prec * 2)
    eps = mpmath.eps
    f = z
    C = z
    D = mpmath.mpf(0)
    k = 1
    while True:
        a = mpmath.mpf(k) / 2
        D = z + a * D
        D = tiny if D == 0 else D
        C = z + a / C
        C = tiny if C == 0 else C
        D = 1 / D
        delta = C * D
        f *= delta
        if abs(delta - 1) < eps:
            break
        k += 1
        if k > 100000:
            break
    return mpmath.exp(-z * z) / (mpmath.sqrt(mpmath.pi) * f)


def antiderivative(x, T, cfg: EvalConfig = DEFAULT):
    """``integral of x over (-inf, T]``, combining the exact split with erf.

    For each term ``s*f + D(f*q)``: the ``D`` part contributes
    ``f(T)*q(T)/sqrt(pi)`` and the Gaussian part
    ``s*amp*exp(-a + b^2/(4c)) * (1 + erf(sqrt(c)*(u + b/(2c)))) / (2*sqrt(c))``.
    Complex arguments use ``mpmath.erf``.
    """
    with mpmath.workprec(cfg.precision_bits):
        T = mpf(T)
        root_pi = mpmath.sqrt(mpmath.pi)
        u = root_pi * T
        total = mpmath.mpc(0)
        for t in _terms(x):
            res = gp.integrate(t)
            g = t.g
            a, b, c = mpc(g.a), mpc(g.b), mpc(g.c)
            rc = mpmath.sqrt(c)
            arg = rc * (u + b / (2 * c))
            erf = erf_hp(arg.real, cfg) if arg.imag == 0 else mpmath.erf(arg)
            gauss_part = (
                mpc(res.remainder_s) * g.amp.value() * mpmath.exp(-a + b * b / (4 * c)) * (1 + erf) / (2 * rc)
            )
            f_T = _CompiledTerm(gp.lift(g))(u)
            q_T = mpmath.polyval([mpc(v) for v in reversed(res.q.coeffs)], u) if res.q else 0
            total += gauss_part + f_T * q_T / root_pi
        return +total


# shared-grid trapezoid oracles --------------------------------------------------
#
# For integrands that decay like Gaussians and are entire, the trapezoid rule
# on the whole line converges geometrically in 1/h.  Halving h reuses every
# old node, and |I(h) - I(2h)| bounds the error of I(h) with a wide margin.
# Evaluations of the signals are shared across all requested points.

MIN_STEP = Fraction(1, 2**14)


def _grid_indices(window: Window, h: Fraction) -> range:
    return range(math.floor(window.lo / h), math.ceil(window.hi / h) + 1)


def _converged(new, old, tol) -> bool:
    return all(abs(a - b) <= tol * max(1, abs(a)) for a, b in zip(new, old))


def _refine(estimate, h0: Fraction, cfg: EvalConfig):
    """Halve the step until two successive sweeps agree; returns ``(values, errors)``."""
    h = Fraction(h0)
    prev = estimate(h)
    while True:
        h /= 2
        if h < MIN_STEP:
            raise DomainError("trapezoid sweep did not converge")
        cur = estimate(h)
        if _converged(cur, prev, cfg.tolerance):
            return cur, [abs(a - b) for a, b in zip(cur, prev)]
        prev = cur


def convolution_samples(x, y, points, cfg: EvalConfig = DEFAULT, h0=Fraction(1, 16)):
    """``(x*y)(T) = integral of x(s) y(T-s) ds`` at each ``T`` in ``points``.

    Each ``T`` must be a multiple of ``h0`` so that ``T - s`` stays on the grid
    and every evaluation of ``y`` is shared.
    """
    points = [Fraction(T) for T in points]
    h0 = Fraction(h0)
    if any((T / h0).denominator != 1 for T in points):
        raise DomainError("convolution sample points must be multiples of the initial step")
    window = window_of(x, cfg)
    with mpmath.workprec(cfg.precision_bits):
        fx, fy = compile_signal(x), compile_signal(y)
        xs, ys = {}, {}

        def at(cache, f, s):
            v = cache.get(s)
            if v is None:
                v = cache[s] = f(mpf(s))
            return v

        def estimate(h):
            nodes = [j * h for j in _grid_indices(window, h)]
            xv = [at(xs, fx, s) for s in nodes]
            return [mpf(h) * mpmath.fsum(a * at(ys, fy, T - s) for a, s in zip(xv, nodes)) for T in points]

        values, errors = _refine(estimate, h0, cfg)
        return [+v for v in values], [+e for e in errors]


def fourier_samples(x, freqs, cfg: EvalConfig = DEFAULT, sign: int = -1, h0=Fraction(1, 16)):
    """``integral of x(t) exp(sign*2*pi*i*tau*t) dt`` at each ``tau`` in ``freqs``."""
    window = window_of(x, cfg)
    with mpmath.workprec(cfg.precision_bits):
        fx = compile_signal(x)
        xs = {}
        taus = [mpf(Fraction(tau)) for tau in freqs]

        def estimate(h):
            nodes = [j * h for j in _grid_indices(window, h)]
            vals = []
            for s in nodes:
                if s not in xs:
                    xs[s] = fx(mpf(s))
                vals.append(xs[s])
            ts = [mpf(s) for s in nodes]
            return [
                mpf(h) * mpmath.fsum(v * mpmath.expjpi(2 * sign * tau * t) for v, t in zip(vals, ts))
                for tau in taus
            ]

        values, errors = _refine(estimate, h0, cfg)
        return [+v for v in values], [+e for e in errors]
