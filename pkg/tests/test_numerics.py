import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delaunay.errors import BracketError, ConvergenceError, QuadratureError, SingularJacobianError
from delaunay.numerics import derivative, find_root_1d, gk15, integrate, solve_2d


def test_integrate_constant_integrand():
    res = integrate(lambda z: math.sqrt(1.0 - (0.0 * math.cos(z)) ** 2), 0.0, math.pi)
    assert res.value == pytest.approx(math.pi, abs=1e-14)
    assert res.error_estimate >= 0.0
    assert res.evaluations >= 15


def test_integrate_cosh_squared():
    res = integrate(lambda z: math.cosh(z) ** 2, 0.0, 1.0)
    assert res.value == pytest.approx((1 + math.sinh(1) * math.cosh(1)) / 2, abs=1e-12)


def test_integrate_empty_interval():
    assert integrate(lambda z: 1.0, 3.0, 3.0).value == 0.0


def test_integrate_rejects_reversed_limits():
    with pytest.raises(ValueError):
        integrate(lambda z: 1.0, 1.0, 0.0)


def test_integrate_reports_non_convergence():
    with pytest.raises(QuadratureError) as info:
        integrate(lambda z: 1.0 / math.sqrt(z) if z > 0 else 0.0, 0.0, 1.0, 1e-15, 1e-15, max_intervals=10)
    assert info.value.estimate == pytest.approx(2.0, rel=0.1)


def test_gk15_exact_on_polynomials():
    # the Kronrod rule integrates degree <= 22 exactly
    coeffs = np.arange(1, 23, dtype=float)
    poly = np.polynomial.Polynomial(coeffs)
    exact = poly.integ()(1.5) - poly.integ()(-0.5)
    value, _ = gk15(poly, -0.5, 1.5)
    assert value == pytest.approx(exact, rel=1e-13)


@settings(max_examples=30, deadline=None)
@given(st.floats(-3, 3), st.floats(0.01, 2), st.floats(0.01, 2))
def test_integrate_additive(a, w1, w2):
    fn = lambda z: math.exp(math.sin(3 * z))
    whole = integrate(fn, a, a + w1 + w2).value
    parts = integrate(fn, a, a + w1).value + integrate(fn, a + w1, a + w1 + w2).value
    assert whole == pytest.approx(parts, abs=1e-9)


def test_derivative_examples():
    assert derivative(math.cosh, 0.0, 1) == pytest.approx(0.0, abs=1e-12)
    assert derivative(math.cosh, 0.0, 2) == pytest.approx(1.0, rel=1e-8)
    assert derivative(lambda t: t * t, 3.0, 1) == pytest.approx(6.0, rel=1e-12)


@pytest.mark.parametrize("t", np.linspace(-5, 5, 21))
@pytest.mark.parametrize(
    "fn,d1,d2",
    [
        (math.exp, math.exp, math.exp),
        (math.sin, math.cos, lambda x: -math.sin(x)),
        (lambda x: x**4 - 2 * x, lambda x: 4 * x**3 - 2, lambda x: 12 * x**2),
    ],
)
def test_derivative_accuracy_targets(t, fn, d1, d2):
    assert abs(derivative(fn, t, 1) - d1(t)) <= 1e-8 * max(1.0, abs(d1(t)))
    assert abs(derivative(fn, t, 2) - d2(t)) <= 1e-6 * max(1.0, abs(d2(t)))


def test_derivative_rejects_order():
    with pytest.raises(ValueError):
        derivative(math.sin, 0.0, 3)


def test_find_root_examples():
    assert find_root_1d(lambda t: math.cosh(t) - 2, 0.0, 2.0, 1e-12).root == pytest.approx(math.acosh(2), abs=1e-12)
    assert find_root_1d(lambda t: t, -1.0, 1.0, 1e-12).root == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(BracketError):
        find_root_1d(lambda t: t * t + 1, 0.0, 1.0)


@settings(max_examples=50, deadline=None)
@given(st.floats(-10, 10))
def test_find_root_cubic(r):
    res = find_root_1d(lambda t: (t - r) ** 3 + (t - r), -20.0, 20.0, 1e-12)
    assert res.converged
    assert abs(res.root - r) <= 1e-9


def test_solve_2d_affine():
    res = solve_2d(lambda x, y: (x - 1, y - 2), (0.0, 0.0), tol=1e-10)
    # converged means residual <= tol; the difference Jacobian is exact up to rounding
    assert res.residual_norm <= 1e-10
    assert res.root == pytest.approx((1.0, 2.0), abs=1e-10)
    assert res.iterations <= 2


def test_solve_2d_sqrt2():
    res = solve_2d(lambda x, y: (x * x - 2, x * y - 2), (1.0, 1.0))
    assert res.converged
    assert res.root == pytest.approx((math.sqrt(2), math.sqrt(2)), abs=1e-10)


def test_solve_2d_singular():
    with pytest.raises(SingularJacobianError):
        solve_2d(lambda x, y: (1.0, 1.0), (0.0, 0.0))


def test_solve_2d_iteration_cap_reports_last_iterate():
    with pytest.raises(ConvergenceError) as info:
        solve_2d(lambda x, y: (math.atan(x) + 0.01 * x * x - 10, y), (0.0, 0.0), max_iter=2)
    assert info.value.result is not None
    assert info.value.result.iterations <= 2
