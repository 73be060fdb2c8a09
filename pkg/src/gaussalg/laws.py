"""Executable signal-processing laws checked on random Gaussian mixtures.

Every law compares two expressions built from the operations in
:mod:`gaussalg.mix`.  Exact laws compare canonical forms; the scalar
product rows compare high-precision numbers.

Conventions: ``F`` is the synthesis transform (kernel ``exp(+2*pi*i*tau*t)``),
``FA`` the analysis transform, ``D`` the scaled derivative
``(1/sqrt(pi)) d/dt``, translation and modulation amounts are in units of
``1/sqrt(pi)``.
"""

from __future__ import annotations

import contextlib
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional
from unittest import mock

import mpmath

from . import mix as gm
from . import poly as gp
from . import quad as gq
from . import scalars as sc
from .errors import DomainError, GenerationExhaustedError
from .mix import GaussMix
from .quad import GaussQuad
from .scalars import Amplitude, ComplexRational

SIGNALS = "xyz"
RATIONALS = "ab"
COMPLEX = "k"
INDEX = "n"


@dataclass(frozen=True)
class Law:
    name: str
    variables: tuple
    lhs: Callable
    rhs: Callable
    statement: str = ""
    applicable: Optional[Callable] = None
    mode: str = "exact"
    tolerance: float = 0.0
    derived: bool = False


@dataclass
class Failure:
    case: int
    inputs: str
    lhs: str
    rhs: str

    def as_dict(self):
        return {"case": self.case, "inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class CheckReport:
    law: str
    cases: int
    seed: int
    mode: str
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        text = f"{verdict} {self.law} ({self.cases} cases, {self.mode}, seed {self.seed})"
        if self.failures:
            text += f": {len(self.failures)} failing, first at case {self.failures[0].case}"
        return text

    def as_dict(self):
        return {
            "law": self.law,
            "cases": self.cases,
            "seed": self.seed,
            "mode": self.mode,
            "passed": self.passed,
            "failures": [f.as_dict() for f in self.failures],
        }


# random inputs ----------------------------------------------------------------


class Generator:
    """Random rationals, Gaussian rationals and chirplet mixtures.

    Numerators and denominators are bounded by ``bound``; every core has
    ``Re(c)`` in ``[1/4, 4]`` so all transforms and convolutions exist.
    """

    def __init__(self, rng: random.Random, max_terms=3, max_degree=2, bound=16, chirp=True):
        self.rng = rng
        self.max_terms = max_terms
        self.max_degree = max_degree
        self.bound = bound
        self.chirp = chirp

    def rational(self, bound=None, nonzero=False) -> Fraction:
        bound = bound or self.bound
        while True:
            q = Fraction(self.rng.randint(-bound, bound), self.rng.randint(1, bound))
            if q or not nonzero:
                return q

    def small_rational(self) -> Fraction:
        return Fraction(self.rng.randint(-4, 4), self.rng.randint(1, 4))

    def complex(self, nonzero=False) -> ComplexRational:
        while True:
            z = ComplexRational(self.small_rational(), self.small_rational())
            if z or not nonzero:
                return z

    def positive_c(self) -> Fraction:
        while True:
            q = Fraction(self.rng.randint(1, self.bound), self.rng.randint(1, self.bound))
            if Fraction(1, 4) <= q <= 4:
                return q

    def core(self) -> GaussQuad:
        re_c = self.positive_c()
        im_c = self.small_rational() if self.chirp else Fraction(0)
        amp = Amplitude(self.complex(nonzero=True), self.rng.random() < 0.5)
        return GaussQuad(amp, self.complex(), self.complex(), ComplexRational(re_c, im_c))

    def poly(self) -> gp.Poly:
        degree = self.rng.randint(0, self.max_degree)
        coeffs = [self.complex() for _ in range(degree)] + [self.complex(nonzero=True)]
        return gp.Poly(tuple(coeffs))

    def term(self) -> gp.GaussPoly:
        return gp.GaussPoly(self.core(), self.poly())

    def signal(self) -> GaussMix:
        terms = []
        for _ in range(self.rng.randint(1, self.max_terms)):
            if terms and self.rng.random() < 0.3:
                # same exponent, amplitude off by a factor in Q+iQ: exercises merging
                base = self.rng.choice(terms)
                r = self.complex(nonzero=True)
                g = gq.scale(r, base.g)
                terms.append(gp.GaussPoly(g, self.poly()))
            else:
                terms.append(self.term())
        return GaussMix(tuple(terms))

    def draw(self, var: str):
        if var in SIGNALS:
            return self.signal()
        if var in RATIONALS:
            return self.small_rational()
        if var in COMPLEX:
            return self.complex()
        if var in INDEX:
            return self.rng.randint(0, 8)
        raise ValueError(f"unknown variable kind {var!r}")


def _case_rng(seed: int, law: str, case: int) -> random.Random:
    return random.Random(f"{seed}:{law}:{case}")


def _render(value) -> str:
    if isinstance(value, GaussMix):
        return gm.render(value)
    if isinstance(value, (mpmath.mpc, mpmath.mpf)):
        return mpmath.nstr(value, 25)
    return str(value)


def _close(lhs, rhs, tol) -> bool:
    return abs(lhs - rhs) <= tol * max(1, abs(lhs))


def draw_inputs(law: Law, rng: random.Random, max_retries: int = 1000, **gen_kwargs) -> dict:
    gen = Generator(rng, **gen_kwargs)
    for _ in range(max_retries):
        env = {v: gen.draw(v) for v in law.variables}
        if law.applicable is None or law.applicable(**env):
            return env
    raise GenerationExhaustedError(f"could not generate applicable inputs for law {law.name!r}")


def check(law: Law, cases: int = 100, seed: int = 0, pointwise: int = 0, **gen_kwargs) -> CheckReport:
    """Run ``law`` on ``cases`` random inputs.

    ``pointwise > 0`` additionally compares both sides of exact laws at that
    many sample points (a redundant numeric oracle).
    """
    if cases < 1:
        raise ValueError("cases must be at least 1")
    report = CheckReport(law.name, cases, seed, law.mode)
    for case in range(cases):
        rng = _case_rng(seed, law.name, case)
        env = draw_inputs(law, rng, **gen_kwargs)
        inputs = ", ".join(f"{k}={_render(v)}" for k, v in env.items())
        try:
            with mpmath.workprec(128):
                lhs = law.lhs(**env)
                rhs = law.rhs(**env)
        except DomainError as exc:
            report.failures.append(Failure(case, inputs, f"error: {exc}", ""))
            continue
        if law.mode == "exact":
            ok = gm.struct_eq(lhs, rhs)
            if ok and pointwise:
                ok = _pointwise_agree(lhs, rhs, rng, pointwise)
        else:
            ok = _close(lhs, rhs, law.tolerance)
        if not ok:
            report.failures.append(Failure(case, inputs, _render(lhs), _render(rhs)))
    return report


def _pointwise_agree(lhs, rhs, rng, n, tol=1e-10) -> bool:
    from . import numeric

    for _ in range(n):
        t = Fraction(rng.randint(-3000, 3000), 1000)
        if not _close(numeric.eval_point(lhs, t), numeric.eval_point(rhs, t), tol):
            return False
    return True


# the catalogue ----------------------------------------------------------------

F = gm.fourier_synthesis
FA = gm.fourier_analysis
D = gm.differentiate
conv = gm.convolve
mul = gm.mul
add = gm.add

GAUSS = GaussMix.of(gq.gauss(1, 0, 0, 1))
CHIRP_UP = GaussMix.of(gq.CHIRP_UP)
CHIRP_DOWN = GaussMix.of(gq.CHIRP_DOWN)
MINUS_2I_ID = gm.scale(ComplexRational(0, -2), gm.ID)


def _nonzero(name):
    return lambda **env: env[name] != 0


def _both_nonzero(**env):
    return env["a"] != 0 and env["b"] != 0


def cis_shrunk(a) -> GaussMix:
    """``t -> exp(2*pi*i*(a/sqrt(pi))*t)``."""
    return gm.modulate(a, gm.ONE)


def norm2(x: GaussMix):
    return mpmath.sqrt(gm.scalar_product(x, x).real)


def catalogue() -> list:
    L = Law
    return [
        L("add-comm", ("x", "y"), lambda x, y: add(x, y), lambda x, y: add(y, x), "x+y = y+x"),
        L("add-assoc", ("x", "y", "z"), lambda x, y, z: add(x, add(y, z)),
          lambda x, y, z: add(add(x, y), z), "x+(y+z) = (x+y)+z"),
        L("mul-comm", ("x", "y"), lambda x, y: mul(x, y), lambda x, y: mul(y, x), "x.y = y.x"),
        L("mul-assoc", ("x", "y", "z"), lambda x, y, z: mul(x, mul(y, z)),
          lambda x, y, z: mul(mul(x, y), z), "x.(y.z) = (x.y).z"),
        L("mul-distrib", ("x", "y", "z"), lambda x, y, z: mul(x, add(y, z)),
          lambda x, y, z: add(mul(x, y), mul(x, z)), "x.(y+z) = x.y + x.z"),
        L("conv-comm", ("x", "y"), lambda x, y: conv(x, y), lambda x, y: conv(y, x),
          "x*y = y*x", derived=True),
        L("conv-assoc", ("x", "y", "z"), lambda x, y, z: conv(x, conv(y, z)),
          lambda x, y, z: conv(conv(x, y), z), "x*(y*z) = (x*y)*z", derived=True),
        L("conv-distrib", ("x", "y", "z"), lambda x, y, z: conv(x, add(y, z)),
          lambda x, y, z: add(conv(x, y), conv(x, z)), "x*(y+z) = x*y + x*z", derived=True),
        L("translate-zero", ("x",), lambda x: gm.translate(0, x), lambda x: x, "T0 x = x"),
        L("translate-compose", ("x", "a", "b"), lambda x, a, b: gm.translate(b, gm.translate(a, x)),
          lambda x, a, b: gm.translate(a + b, x), "Tb(Ta x) = T(a+b) x"),
        L("shrink-one", ("x",), lambda x: gm.shrink(1, x), lambda x: x, "S1 x = x"),
        L("shrink-compose", ("x", "a", "b"), lambda x, a, b: gm.shrink(b, gm.shrink(a, x)),
          lambda x, a, b: gm.shrink(a * b, x), "Sb(Sa x) = S(a.b) x", _both_nonzero),
        L("translate-shrink", ("x", "a", "b"), lambda x, a, b: gm.translate(a, gm.shrink(b, x)),
          lambda x, a, b: gm.shrink(b, gm.translate(a * b, x)), "Ta(Sb x) = Sb(T(a.b) x)",
          _nonzero("b")),
        L("translate-add", ("x", "y", "a"), lambda x, y, a: gm.translate(a, add(x, y)),
          lambda x, y, a: add(gm.translate(a, x), gm.translate(a, y)), "Ta(x+y) = Ta x + Ta y"),
        L("shrink-add", ("x", "y", "a"), lambda x, y, a: gm.shrink(a, add(x, y)),
          lambda x, y, a: add(gm.shrink(a, x), gm.shrink(a, y)), "Sa(x+y) = Sa x + Sa y",
          _nonzero("a")),
        L("translate-mul", ("x", "y", "a"), lambda x, y, a: gm.translate(a, mul(x, y)),
          lambda x, y, a: mul(gm.translate(a, x), gm.translate(a, y)), "Ta(x.y) = Ta x . Ta y"),
        L("shrink-mul", ("x", "y", "a"), lambda x, y, a: gm.shrink(a, mul(x, y)),
          lambda x, y, a: mul(gm.shrink(a, x), gm.shrink(a, y)), "Sa(x.y) = Sa x . Sa y",
          _nonzero("a")),
        L("translate-conv", ("x", "y", "a"), lambda x, y, a: gm.translate(a, conv(x, y)),
          lambda x, y, a: conv(x, gm.translate(a, y)), "Ta(x*y) = x * Ta y"),
        L("shrink-conv", ("x", "y", "a"), lambda x, y, a: gm.shrink(a, conv(x, y)),
          lambda x, y, a: gm.scale(abs(a), conv(gm.shrink(a, x), gm.shrink(a, y))),
          "Sa(x*y) = |a|.(Sa x * Sa y)", _nonzero("a")),
        L("leibniz", ("x", "y"), lambda x, y: D(mul(x, y)),
          lambda x, y: add(mul(D(x), y), mul(x, D(y))), "D(x.y) = Dx.y + x.Dy"),
        L("conv-derivative", ("x", "y"), lambda x, y: D(conv(x, y)), lambda x, y: conv(x, D(y)),
          "D(x*y) = x * Dy"),
        L("fourier-add", ("x", "y"), lambda x, y: F(add(x, y)), lambda x, y: add(F(x), F(y)),
          "F(x+y) = Fx + Fy"),
        L("fourier-scale", ("x", "k"), lambda x, k: F(gm.scale(k, x)), lambda x, k: gm.scale(k, F(x)),
          "F(k.x) = k.Fx"),
        L("convolution-theorem", ("x", "y"), lambda x, y: F(conv(x, y)), lambda x, y: mul(F(x), F(y)),
          "F(x*y) = Fx . Fy"),
        L("multiplication-theorem", ("x", "y"), lambda x, y: F(mul(x, y)), lambda x, y: conv(F(x), F(y)),
          "F(x.y) = Fx * Fy", derived=True),
        L("unitarity", ("x", "y"), lambda x, y: gm.scalar_product(x, y),
          lambda x, y: gm.scalar_product(F(x), F(y)), "<x,y> = <Fx,Fy>",
          mode="numeric", tolerance=1e-10),
        L("parseval", ("x",), lambda x: norm2(x), lambda x: norm2(F(x)), "||x|| = ||Fx||",
          mode="numeric", tolerance=1e-10, derived=True),
        L("fourier-shrink", ("x", "a"), lambda x, a: F(gm.shrink(a, x)),
          lambda x, a: gm.scale(1 / abs(a), gm.shrink(1 / a, F(x))),
          "F(Sa x) = (1/|a|).S(1/a)(Fx)", _nonzero("a")),
        L("fourier-translate", ("x", "a"), lambda x, a: F(gm.translate(a, x)),
          lambda x, a: mul(cis_shrunk(a), F(x)), "F(Ta x) = (Sa cis).Fx"),
        L("duality", ("x",), lambda x: F(F(x)), lambda x: gm.shrink(-1, x), "F(Fx) = S(-1) x"),
        L("fourier-adjoint", ("x",), lambda x: F(gm.adjoint(x)), lambda x: gm.conjugate(F(x)),
          "F(adj x) = conj(Fx)"),
        L("fourier-derivative", ("x",), lambda x: F(D(x)), lambda x: mul(MINUS_2I_ID, F(x)),
          "F(Dx) = (-2i.id).Fx"),
        # transform-pair rows and the Gaussian models
        L("eigenfunction", (), lambda: F(GAUSS), lambda: GAUSS, "F g = g"),
        L("eigenfunction-analysis", (), lambda: FA(GAUSS), lambda: GAUSS, "FA g = g"),
        L("convolution-theorem-analysis", ("x", "y"), lambda x, y: FA(conv(x, y)),
          lambda x, y: mul(FA(x), FA(y)), "FA(x*y) = FAx . FAy"),
        L("duality-analysis", ("x",), lambda x: FA(FA(x)), lambda x: gm.shrink(-1, x),
          "FA(FA x) = S(-1) x"),
        L("fourier-inverse", ("x",), lambda x: F(FA(x)), lambda x: x, "F(FA x) = x"),
        L("fourier-modulate", ("x", "a"), lambda x, a: F(gm.modulate(a, x)),
          lambda x, a: gm.translate(-a, F(x)), "F(x.(Sa cis)) = T(-a)(Fx)"),
        L("bluestein-analysis", ("x",), lambda x: FA(x),
          lambda x: mul(conv(mul(x, CHIRP_UP), CHIRP_DOWN), CHIRP_UP),
          "FA x = ((x.f(1,0,0,i)) * f(1,0,0,-i)) . f(1,0,0,i)"),
        L("bluestein-synthesis", ("x",), lambda x: F(x),
          lambda x: mul(conv(mul(x, CHIRP_DOWN), CHIRP_UP), CHIRP_DOWN),
          "F x = ((x.f(1,0,0,-i)) * f(1,0,0,i)) . f(1,0,0,-i)"),
        L("hermite-eigen", ("n",), lambda n: FA(GaussMix.of(gp.hermite_eigenfunction(n))),
          lambda n: gm.scale(ComplexRational(0, -1) ** n, GaussMix.of(gp.hermite_eigenfunction(n))),
          "FA e_n = (-i)^n e_n"),
    ]


def get(name: str) -> Law:
    for law in catalogue():
        if law.name == name:
            return law
    raise KeyError(f"unknown law {name!r}")


def check_all(cases: int = 100, seed: int = 0, names=None, **kwargs) -> list:
    laws = catalogue() if names is None else [get(n) for n in names]
    return [check(law, cases, seed, **kwargs) for law in laws]


def reports_json(reports) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=2)


# mutation guard -----------------------------------------------------------------


def _translate_no_factor(k, x):
    k = sc.as_rational(k)
    if x.is_zero():
        return x
    return GaussQuad(x.amp, x.a - x.b * k + x.c * k * k, x.b - x.c * k, x.c)


def _amp_mul_no_flip(x, y):
    product = x.square * y.square
    if not product:
        return Amplitude(sc.ZERO)
    return Amplitude(product, x.negate ^ y.negate)


def _modulate_plus(k, x):
    k = sc.as_rational(k)
    if x.is_zero():
        return x
    return GaussQuad(x.amp, x.a, x.b + ComplexRational(0, 2 * k), x.c)


def _derive_half(g, p):
    return p.derivative() - gp.Poly((g.b, g.c)) * p


def _convolve_b_swapped(x, y):
    if x.is_zero() or y.is_zero():
        return gq.ZERO_SIGNAL
    s = x.c + y.c
    if s.re <= 0:
        from .errors import DivergentIntegralError

        raise DivergentIntegralError("divergent: Re(c0+c1) <= 0")
    inv = 1 / s
    db = x.b - y.b
    amp = sc.amp_mul(sc.amp_mul(x.amp, y.amp), Amplitude(inv))
    return GaussQuad(amp, x.a + y.a - db * db * inv / 4, (x.b * x.c + y.b * y.c) * inv, x.c * y.c * inv)


MUTATIONS = {
    "translate-b-factor": (gq, "translate", _translate_no_factor),
    "amp-mul-no-flip": (sc, "amp_mul", _amp_mul_no_flip),
    "modulate-sign": (gq, "modulate", _modulate_plus),
    "derivative-factor": (gp, "_derive", _derive_half),
    "convolve-b-swap": (gq, "convolve", _convolve_b_swapped),
}


@contextlib.contextmanager
def mutation(name: str):
    """Temporarily replace one parameter-update rule with a wrong variant."""
    module, attr, replacement = MUTATIONS[name]
    with mock.patch.object(module, attr, replacement):
        yield
