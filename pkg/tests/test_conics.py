import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import ellipeinc

from delaunay.conics import (
    ConicKind,
    ConicSpec,
    conic_arclength,
    conic_foci,
    conic_point,
    conic_speed,
    conic_tangent,
    pedal_foot,
)
from delaunay.errors import DegenerateError, ValidationError

SQ3, SQ2 = math.sqrt(3.0), math.sqrt(2.0)


def test_spec_validation():
    with pytest.raises(ValidationError):
        ConicSpec.ellipse(1.0, 0.0)
    with pytest.raises(ValidationError):
        ConicSpec.ellipse(1.0, 2.0)
    with pytest.raises(ValidationError):
        ConicSpec.hyperbola(-1.0, 1.0)
    with pytest.raises(ValidationError):
        ConicSpec.parabola(float("nan"))
    assert ConicSpec.ellipse(1.5, 1.5).c == 0.0
    assert ConicSpec.parabola(2.0).a is None
    assert ConicSpec.parabola(2.0).c is None
    assert ConicSpec("hyperbola", 1.0, 1.0).kind is ConicKind.HYPERBOLA
    h = ConicSpec.hyperbola(0.7, 2.2)
    assert h.c > h.a


def test_conic_point_examples():
    assert conic_point(ConicSpec.ellipse(2, 1), 0.0) == (2.0, 0.0)
    assert conic_point(ConicSpec.parabola(1), 0.0) == (0.0, 0.0)
    assert conic_point(ConicSpec.hyperbola(1, 1), 0.0) == (1.0, 0.0)


def test_conic_tangent_examples():
    p, u = conic_tangent(ConicSpec.ellipse(2, 1), math.pi / 2)
    assert p == pytest.approx((0.0, 1.0), abs=1e-15)
    assert u == pytest.approx((-1.0, 0.0), abs=1e-15)
    p, u = conic_tangent(ConicSpec.parabola(1), 0.0)
    assert p == (0.0, 0.0) and u == pytest.approx((0.0, 1.0))
    p, u = conic_tangent(ConicSpec.hyperbola(1, 1), 0.0)
    assert p == (1.0, 0.0) and u == pytest.approx((0.0, 1.0))


def test_conic_tangent_degenerate():
    with pytest.raises(DegenerateError):
        conic_tangent(ConicSpec.hyperbola(1, 1), 1000.0)


def test_conic_foci_examples():
    assert conic_foci(ConicSpec.ellipse(2, 1)) == pytest.approx([(SQ3, 0.0), (-SQ3, 0.0)])
    assert conic_foci(ConicSpec.hyperbola(1, 1)) == pytest.approx([(SQ2, 0.0), (-SQ2, 0.0)])
    assert conic_foci(ConicSpec.parabola(1)) == [(1.0, 0.0)]


@pytest.mark.parametrize("t", [-1.3, 0.2, 2.0])
def test_parabola_focus_is_equidistant_from_directrix(t):
    # y^2 = 4bx has focus (b, 0) and directrix x = -b
    b = 1.7
    p = conic_point(ConicSpec.parabola(b), t)
    assert math.hypot(p.x - b, p.y) == pytest.approx(p.x + b, rel=1e-13)


def test_pedal_foot_examples():
    # the tangent at the top vertex is y = 1; the focus drops straight onto it
    assert pedal_foot(ConicSpec.ellipse(2, 1), 0, math.pi / 2) == pytest.approx((SQ3, 1.0), abs=1e-15)
    assert pedal_foot(ConicSpec.hyperbola(1, 1), 0, 0.0) == pytest.approx((1.0, 0.0), abs=1e-15)
    with pytest.raises(ValidationError):
        pedal_foot(ConicSpec.parabola(1), 1, 0.0)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["ellipse", "hyperbola"]),
    st.floats(0.3, 4),
    st.floats(0.1, 1.0),
    st.integers(0, 1),
    st.floats(-3, 3),
)
def test_pedal_circle(kind, a, ratio, focus, t):
    b = a * ratio if kind == "ellipse" else a / ratio
    q = pedal_foot(ConicSpec(kind, a, b), focus, t)
    assert math.hypot(*q) == pytest.approx(a, abs=1e-10)


def test_conic_arclength_examples():
    assert conic_arclength(ConicSpec.parabola(1), 0, 1) == pytest.approx(1 + math.sinh(1) * math.cosh(1), abs=1e-14)
    r = 1.3
    assert conic_arclength(ConicSpec.ellipse(r, r), 0, 2 * math.pi) == pytest.approx(2 * math.pi * r, abs=1e-12)
    assert conic_arclength(ConicSpec.hyperbola(1, 1), 0, 0) == 0.0


def test_parabola_arclength_matches_quadrature():
    from delaunay.numerics import integrate

    conic = ConicSpec.parabola(0.8)
    quad = integrate(lambda t: conic_speed(conic, t), -0.4, 1.1).value
    assert conic_arclength(conic, -0.4, 1.1) == pytest.approx(quad, rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.5, 3), st.floats(0.2, 1.0), st.floats(-6, 6))
def test_ellipse_arclength_against_elliptic_integral(a, ratio, t):
    b = a * ratio
    m = 1.0 - ratio * ratio
    # substituting t = pi/2 - phi turns the speed into a sqrt(1 - m sin^2 phi)
    expected = a * (ellipeinc(math.pi / 2, m) - ellipeinc(math.pi / 2 - t, m))
    assert conic_arclength(ConicSpec.ellipse(a, b), 0.0, t) == pytest.approx(expected, abs=1e-9)


def test_arclength_is_signed():
    h = ConicSpec.hyperbola(1.2, 0.7)
    assert conic_arclength(h, 1.0, -0.5) == pytest.approx(-conic_arclength(h, -0.5, 1.0), rel=1e-14)
