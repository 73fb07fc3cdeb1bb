import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from sturmian.specfun import (
    expint_ei,
    gauss_hermite,
    hermite,
    hermite_coeffs,
    hermite_complex,
    kummer_1f1_half,
    kummer_1f1_half_coeffs,
    laguerre_half,
    laguerre_half_coeffs,
    poly_eval,
    poly_roots,
)

# Ei values from adaptive quadrature of -int_{-x}^inf e^-t/t dt (scipy.integrate.quad)
EI_FROZEN = {-2.0: -0.04890051070806112, -1.0: -0.21938393439552029, -10.0: -4.156968929685324e-06}


def test_hermite_small_orders():
    assert hermite(0, 3.7) == 1
    assert hermite(2, 1.0) == 2
    assert hermite(3, 2.0) == 40


def test_hermite_complex_values():
    assert hermite_complex(1, 1j) == 2j
    assert hermite_complex(2, 1j) == -6
    assert hermite_complex(4, 0) == 12


def test_hermite_negative_order():
    with pytest.raises(ValueError):
        hermite(-1, 0.0)
    with pytest.raises(ValueError):
        hermite_complex(-2, 1j)


def test_hermite_matches_scipy():
    x = np.linspace(-4, 4, 33)
    for n in range(15):
        np.testing.assert_allclose(hermite(n, x), special.eval_hermite(n, x), rtol=1e-12, atol=1e-12)


def test_hermite_coeffs_exact():
    assert hermite_coeffs(3) == [0, -12, 0, 8]
    for n in range(12):
        c = hermite_coeffs(n)
        assert all(isinstance(v, int) for v in c)
        assert poly_eval(c, 0.7) == pytest.approx(hermite(n, 0.7), rel=1e-12)


@pytest.mark.parametrize("s", [0.1, 0.3])
def test_generating_function(s):
    x = np.linspace(-3, 3, 25)
    series = sum(s ** n / math.factorial(n) * hermite(n, x) for n in range(31))
    assert np.max(np.abs(series - np.exp(2 * s * x - s * s))) <= 1e-10


@given(st.integers(0, 25), st.floats(-5, 5))
def test_hermite_parity(n, x):
    assert hermite(n, -x) == pytest.approx((-1) ** n * hermite(n, x), rel=1e-12, abs=1e-12)


def test_gauss_hermite_low_orders():
    r1 = gauss_hermite(1)
    assert r1.nodes.tolist() == [0.0]
    assert r1.weights[0] == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    r2 = gauss_hermite(2)
    np.testing.assert_allclose(r2.nodes, [-1 / math.sqrt(2), 1 / math.sqrt(2)], rtol=1e-15)
    np.testing.assert_allclose(r2.weights, [math.sqrt(math.pi) / 2] * 2, rtol=1e-15)


def test_gauss_hermite_fourth_moment():
    assert gauss_hermite(20).integrate(lambda u: u ** 4) == pytest.approx(0.75 * math.sqrt(math.pi), rel=1e-13)


@pytest.mark.parametrize("order", [0, -1, 201])
def test_gauss_hermite_order_range(order):
    with pytest.raises(ValueError):
        gauss_hermite(order)


def test_gauss_hermite_readonly():
    r = gauss_hermite(5)
    with pytest.raises(ValueError):
        r.nodes[0] = 1.0


@pytest.mark.parametrize("order", [1, 2, 3, 7, 20, 64, 150])
def test_gauss_hermite_structure(order):
    r = gauss_hermite(order)
    assert np.all(np.diff(r.nodes) > 0)
    np.testing.assert_allclose(r.nodes, -r.nodes[::-1], atol=1e-14)
    assert abs(r.weights.sum() - math.sqrt(math.pi)) <= 1e-13


@settings(max_examples=40)
@given(st.integers(1, 40), st.data())
def test_gauss_hermite_exactness(order, data):
    deg = data.draw(st.integers(0, 2 * order - 1))
    got = gauss_hermite(order).integrate(lambda u: u ** deg)
    exact = 0.0 if deg % 2 else math.gamma((deg + 1) / 2)
    # relative to int |u|^deg e^-u^2, the natural size of the integrand
    scale = math.gamma((deg + 1) / 2)
    assert abs(got - exact) <= 1e-12 * scale


@pytest.mark.parametrize("x,expected", sorted(EI_FROZEN.items()))
def test_ei_frozen(x, expected):
    assert expint_ei(x) == pytest.approx(expected, rel=1e-12)


def test_ei_against_quadrature():
    for x in np.linspace(-20, -0.01, 41):
        ref = -integrate.quad(lambda t: math.exp(-t) / t, -x, np.inf, epsabs=0, epsrel=1e-13, limit=200)[0]
        assert abs(expint_ei(x) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_ei_against_scipy():
    x = -np.logspace(-8, math.log10(50), 200)
    ours = np.array([expint_ei(v) for v in x])
    np.testing.assert_allclose(ours, special.expi(x), rtol=1e-13)
    for v in (0.01, 0.5, 1.0):
        assert expint_ei(v) == pytest.approx(special.expi(v), rel=1e-13)


def test_ei_derivative():
    h = 1e-5
    d = (expint_ei(-2 + h) - expint_ei(-2 - h)) / (2 * h)
    assert d == pytest.approx(math.exp(-2) / -2, abs=1e-6)


def test_ei_domain():
    with pytest.raises(ValueError):
        expint_ei(0.0)
    with pytest.raises(ValueError):
        expint_ei(2.0)


def test_laguerre_half_listed():
    assert laguerre_half(1, 0.3) == pytest.approx(0.5 - 0.3)
    assert laguerre_half(2, 0.0) == pytest.approx(3 / 8)
    assert laguerre_half(0, 5.0) == 1
    x = 0.7
    assert laguerre_half(2, x) == pytest.approx((3 - 12 * x + 4 * x * x) / 8)


def test_laguerre_half_matches_scipy():
    x = np.linspace(-3, 6, 19)
    for k in range(10):
        np.testing.assert_allclose(laguerre_half(k, x), special.eval_genlaguerre(k, -0.5, x), rtol=1e-12, atol=1e-12)
        np.testing.assert_allclose(poly_eval(laguerre_half_coeffs(k), x), laguerre_half(k, x), rtol=1e-12, atol=1e-12)


def test_kummer_listed():
    for x in (-3.0, -0.2, 0.0, 1.5):
        assert kummer_1f1_half(1.5, x) == pytest.approx(math.exp(x), rel=1e-14)
    assert kummer_1f1_half(2.5, 0.0) == 1.0
    assert kummer_1f1_half(3.5, 1.0) == pytest.approx(39 * math.e / 15, rel=1e-14)


def test_kummer_matches_scipy():
    for k in range(8):
        a = k + 1.5
        for x in np.linspace(-40, 40, 41):
            assert kummer_1f1_half(a, x) == pytest.approx(special.hyp1f1(a, 1.5, x), rel=1e-11)


def test_kummer_coeffs():
    c = kummer_1f1_half_coeffs(2.5, 4)
    x = 0.01
    assert poly_eval(c, x) == pytest.approx(special.hyp1f1(2.5, 1.5, x), rel=1e-10)


def test_kummer_errors():
    with pytest.raises(ValueError):
        kummer_1f1_half(2.0, 0.1)
    with pytest.raises(OverflowError):
        kummer_1f1_half(1.5, 51.0)


def test_poly_roots_imaginary_pair():
    r = poly_roots([1, 0, 1])
    assert r.degree == 2
    np.testing.assert_allclose(r.roots, [-1j, 1j], atol=1e-15)


def test_poly_roots_coupled_cubic():
    r = poly_roots([1, -3, 4, 16])
    expected = [-0.669498, 0.209749 - 0.222168j, 0.209749 + 0.222168j]
    np.testing.assert_allclose(r.roots, expected, atol=1e-5)
    assert max(r.residuals) < 1e-12


def test_poly_roots_triple():
    r = poly_roots([-8, 12, -6, 1])
    np.testing.assert_allclose(r.roots, [2, 2, 2], atol=1e-8)
    assert max(r.residuals) <= 1e-8


def test_poly_roots_errors():
    with pytest.raises(ValueError):
        poly_roots([3.0])
    with pytest.raises(ValueError):
        poly_roots([1.0, 2.0, 0.0])


@settings(max_examples=60)
@given(st.lists(st.floats(-5, 5), min_size=1, max_size=8), st.floats(0.5, 3))
def test_poly_roots_reconstruction(true_roots, lead):
    coeffs = lead * np.poly(true_roots)[::-1]
    res = poly_roots(list(coeffs))
    assert res.degree == len(true_roots)
    back = lead * np.poly(res.roots)[::-1]
    scale = np.max(np.abs(coeffs))
    assert np.max(np.abs(back - coeffs)) <= 1e-8 * scale
    for z, r in zip(res.roots, res.residuals):
        assert abs(poly_eval(list(coeffs), z)) <= r + 1e-300
