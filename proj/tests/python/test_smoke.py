"""Smoke tests for the python bindings."""

import math

import pytest

import fracosc


def test_special_functions():
    assert fracosc.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert fracosc.dawson(1.0) == pytest.approx(0.53807950691276842, rel=1e-13)
    assert fracosc.erfi(1.0) == pytest.approx(1.6504257587975429, rel=1e-13)


def test_mittag_leffler_routes():
    v = fracosc.mittag_leffler(1.8, 1.0, -4.0)
    assert v.value == pytest.approx(-0.42478976004321821, abs=1e-10)
    assert v.method == "series"
    assert v.err_estimate <= 1e-10
    w = fracosc.mittag_leffler(1.8, 1.0, -40.0)
    assert w.method == "spectral"


def test_oscillation_pair_limits():
    for t in [0.0, 0.5, 1.5, 3.1]:
        assert fracosc.e_alpha(2.0, 1.0, t) == pytest.approx(math.cos(t), abs=1e-11)
        assert fracosc.i_alpha(2.0, 1.0, t) == pytest.approx(math.sin(t), abs=1e-11)
    assert fracosc.i_one(1.0) == pytest.approx(math.exp(-1) * fracosc.erfi(1.0), rel=1e-12)


def test_decompose_identity():
    cut, res = fracosc.decompose("i", 1.8, 2.0)
    assert cut + res == pytest.approx(fracosc.i_alpha(1.8, 1.0, 2.0), abs=1e-9)


def test_fractional_operators():
    n = 256
    dt = 2.0 / n
    ones = [1.0] * (n + 1)
    j = fracosc.rl_integral(ones, dt, 0.5)
    t_half = (100 * dt) ** 0.5
    assert j[100] == pytest.approx(t_half / math.gamma(1.5), abs=1e-10)
    d = fracosc.caputo_derivative([3.0] * (n + 1), dt, 0.7)
    assert max(abs(x) for x in d) == 0.0


def test_residual_report():
    rep = fracosc.residual_eq2(1.5, 10.0, 128)
    assert rep.sup_norm < 1e-3
    assert rep.expected_order == 2.0


def test_zeros():
    rep = fracosc.find_zeros("e", 1.5)
    assert len(rep.zeros) == 3
    assert rep.zeros[0] < fracosc.smallest_zero_bound(1.5)
    assert rep.tail_bound_at_tmax >= 10.0 * rep.envelope_at_tmax


def test_mc_reproducible():
    a = fracosc.mc_oscillation(1.5, 1.0, [1.0, 2.0], 500, 99)
    b = fracosc.mc_oscillation(1.5, 1.0, [1.0, 2.0], 500, 99)
    assert a.a_hat == b.a_hat
    assert a.std_err_b == b.std_err_b
    e = fracosc.e_alpha(1.5, 1.0, 1.0)
    assert abs(a.a_hat[0] - e) < 6 * a.std_err_a[0]


def test_ps_density_closed_form():
    assert fracosc.ps_density(1.0, 1.0, 0.0) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-13)
    a, b = fracosc.quadrature_oscillation(1.0, 1.0, 1.0)
    assert a == pytest.approx(math.exp(-1.0), abs=1e-8)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        fracosc.gamma(-2.0)
    with pytest.raises(RuntimeError):
        fracosc.largest_zero_near1(0.3)
