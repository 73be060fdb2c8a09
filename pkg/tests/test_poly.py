from fractions import Fraction as Q

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussalg import mix as gm
from gaussalg import numeric as nm
from gaussalg import poly as gp
from gaussalg import quad as gq
from gaussalg.errors import DivergentIntegralError, UnsupportedDomainError
from gaussalg.poly import GaussPoly, Poly, phi
from gaussalg.quad import gauss as f
from gaussalg.scalars import ComplexRational as C

from conftest import chirplets, close, gausspolys, polys, rationals

I = C(0, 1)
G = f(1, 0, 0, 1)


def same(x, y):
    return gm.struct_eq(gm.GaussMix.of(x), gm.GaussMix.of(y))


def test_poly_basics():
    p = Poly.of(1, 2, 0)
    assert p.degree == 1
    assert Poly.of(0, 0).is_zero()
    assert (Poly.of(1, 1) * Poly.of(-1, 1)) == Poly.of(-1, 0, 1)
    assert Poly.of(0, 0, 1).shift(1) == Poly.of(1, -2, 1)
    assert Poly.of(1, 1, 1).dilate(2) == Poly.of(1, 2, 4)
    assert Poly.of(1, 2, 3).derivative() == Poly.of(2, 6)
    assert str(Poly.of(1, I)) == "[1, i]"


def test_differentiate():
    assert gp.differentiate(phi(G, [1])) == phi(G, [0, -2])
    assert gp.differentiate(phi(G, [])).is_zero()


def test_differentiate_finite_difference():
    x = phi(f(2, I, 1 - I, 1 + I), [1, I, 2])
    d = gp.differentiate(x)
    with mpmath.workprec(128):
        g = nm.compile_signal(x)
        for t in (Q(-1, 3), Q(1, 2)):
            numeric = mpmath.diff(g, nm.mpf(t)) / mpmath.sqrt(mpmath.pi)
            assert close(nm.eval_point(d, t), numeric, 1e-25)


def test_fourier_examples():
    assert gp.fourier_analysis(phi(G, [1])) == phi(G, [1])
    assert gp.fourier_analysis(phi(G, [0, -4])) == phi(G, [0, 4 * I])
    assert gp.fourier_analysis(gp.ZERO).is_zero()


def test_fourier_quadrature():
    x = phi(f(1, Q(1, 2), 1, 1 + I), [1, -I, Q(1, 2)])
    taus = [Q(-1), Q(-1, 4), Q(1, 3), Q(6, 5)]
    vals, _ = nm.fourier_samples(x, taus)
    for tau, v in zip(taus, vals):
        assert close(nm.eval_point(gp.fourier_analysis(x), tau), v, 1e-20)


def test_convolve_examples():
    assert same(gp.convolve(phi(G, [1]), phi(G, [1])), phi(f(Q(1, 2), 0, 0, Q(1, 2)), [1]))
    assert gp.convolve(phi(G, [1, 2]), gp.ZERO).is_zero()
    e0, e1 = gp.hermite_eigenfunction(0), gp.hermite_eigenfunction(1)
    z = gp.convolve(e1, e0)
    pts = [Q(k, 16) for k in range(-24, 25, 3)]
    vals, _ = nm.convolution_samples(e1, e0, pts)
    for t, v in zip(pts, vals):
        assert close(nm.eval_point(z, t), v, 1e-10)


def test_convolve_with_chirp():
    # Re(c) == 0 on one side is fine as long as Re(c0 + c1) > 0
    x = phi(f(1, 0, 1, 1), [1, 2, 3])
    z = gp.convolve(x, gp.lift(gq.CHIRP_DOWN))
    with mpmath.workprec(128):
        fx, fc = nm.compile_signal(x), nm.compile_signal(gq.CHIRP_DOWN)
        for t in (Q(-1, 2), Q(3, 10)):
            T = nm.mpf(t)
            direct = mpmath.quad(lambda s: fx(s) * fc(T - s), [-8, -2, 0, 2, 8])
            assert close(nm.eval_point(z, t), direct, 1e-25)


def test_convolve_exponential_with_polynomial():
    # a polynomial on a core with c == 0 against a Gaussian
    x = phi(f(1, 0, Q(1, 2), 0), [0, 1])
    y = gp.lift(f(1, 0, 0, 1))
    z = gp.convolve(x, y)
    with mpmath.workprec(128):
        fx, fy = nm.compile_signal(x), nm.compile_signal(y)
        for t in (Q(-1, 2), Q(1, 3)):
            T = nm.mpf(t)
            direct = mpmath.quad(lambda s: fx(s) * fy(T - s), [-12, -3, 0, 3, 12])
            assert close(nm.eval_point(z, t), direct, 1e-25)


def test_convolve_divergent():
    with pytest.raises(DivergentIntegralError):
        gp.convolve(phi(f(1, 0, 0, I), [0, 1]), phi(f(1, 0, 0, -I), [1]))


def test_integrate_examples():
    r = gp.integrate(phi(G, [0, 1]))
    assert r.remainder_s == 0 and r.q == Poly.of(Q(-1, 2))
    r = gp.integrate(phi(G, [1]))
    assert r.remainder_s == 1 and r.q.is_zero()
    assert str(gp.integrate(phi(G, [0, 1]))) == "integral(s=0, q=[-1/2])"
    with pytest.raises(UnsupportedDomainError):
        gp.integrate(phi(f(1, 0, 1, 0), [1]))
    with pytest.raises(DivergentIntegralError):
        gp.integrate(phi(f(1, 0, 0, -1), [1]))


def test_hermite():
    assert gp.hermite_eigenfunction(0) == phi(G, [1])
    assert gp.hermite_eigenfunction(1) == phi(G, [0, -4])
    for n in range(9):
        e = gp.hermite_eigenfunction(n)
        assert same(gp.fourier_analysis(e), gp.scale((-I) ** n, e))


def test_lifted_examples():
    a = f(1, 0, 1, 1)
    assert gp.shrink(2, phi(a, [0, 1])) == phi(gq.shrink(2, a), [0, 2])
    assert gp.translate(Q(1, 3), phi(a, [1])) == phi(gq.translate(Q(1, 3), a), [1])
    b = f(2, 1, I, 3)
    assert gp.mul(phi(a, [0, 1]), phi(b, [0, 1])) == phi(gq.mul(a, b), [0, 0, 1])


def test_render():
    assert str(phi(G, [0, -4])) == "gausspoly(y=1, a=0, b=0, c=1, p=[0, -4])"


@given(gausspolys(max_degree=6))
def test_integrate_round_trip(x):
    r = gp.integrate(x)
    rebuilt = gm.add(gm.GaussMix.of(gp.scale(r.remainder_s, gp.lift(x.g))),
                     gm.GaussMix.of(gp.differentiate(GaussPoly(x.g, r.q))))
    assert gm.struct_eq(rebuilt, gm.GaussMix.of(x))


@given(gausspolys(), gausspolys())
def test_convolution_matches_fourier_route(x, y):
    direct = gp.convolve(x, y)
    via = gp.fourier_synthesis(gp.mul(gp.fourier_analysis(x), gp.fourier_analysis(y)))
    assert same(direct, via)


@given(gausspolys(), rationals)
def test_translate_pointwise(x, k):
    with mpmath.workprec(128):
        shift = nm.mpf(k) / mpmath.sqrt(mpmath.pi)
        g = nm.compile_signal(x)
        t = nm.mpf(Q(1, 7))
        assert close(nm.eval_point(gp.translate(k, x), Q(1, 7)), g(t - shift), 1e-25)


@given(chirplets(), polys(), st.integers(0, 3))
def test_pow(g, p, n):
    x = GaussPoly(g, p)
    expected = gm.pow(gm.GaussMix.of(x), n)
    assert gm.struct_eq(gm.GaussMix.of(gp.pow(x, n)), expected)
