from fractions import Fraction

import mpmath
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gaussalg import mix as gm
from gaussalg import numeric as nm
from gaussalg.poly import GaussPoly, Poly
from gaussalg.quad import GaussQuad
from gaussalg.scalars import Amplitude, ComplexRational

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# strategies -----------------------------------------------------------------------

small_ints = st.integers(-6, 6)
dens = st.integers(1, 6)
rationals = st.builds(Fraction, small_ints, dens)
nonzero_rationals = rationals.filter(bool)
positive_rationals = st.builds(Fraction, st.integers(1, 12), st.integers(1, 12))
complexes = st.builds(ComplexRational, rationals, rationals)
nonzero_complexes = complexes.filter(bool)
amplitudes = st.builds(Amplitude, nonzero_complexes, st.booleans())
re_c = st.builds(Fraction, st.integers(1, 16), st.integers(1, 16)).filter(
    lambda q: Fraction(1, 4) <= q <= 4
)
chirplet_c = st.builds(ComplexRational, re_c, rationals)


@st.composite
def chirplets(draw):
    return GaussQuad(draw(amplitudes), draw(complexes), draw(complexes), draw(chirplet_c))


@st.composite
def polys(draw, max_degree=2):
    coeffs = draw(st.lists(complexes, min_size=0, max_size=max_degree))
    return Poly(tuple(coeffs) + (draw(nonzero_complexes),))


@st.composite
def gausspolys(draw, max_degree=2):
    return GaussPoly(draw(chirplets()), draw(polys(max_degree)))


@st.composite
def mixtures(draw, max_terms=3):
    return gm.GaussMix(tuple(draw(st.lists(gausspolys(), min_size=1, max_size=max_terms))))


# numeric helpers ------------------------------------------------------------------


def close(a, b, tol):
    return abs(a - b) <= tol * max(1, abs(a))


def value_at(x, t, bits=128):
    return nm.eval_point(x, t, nm.EvalConfig(bits))


@pytest.fixture
def mp128():
    with mpmath.workprec(128):
        yield
