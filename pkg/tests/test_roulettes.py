import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delaunay.conics import ConicSpec
from delaunay.errors import ValidationError
from delaunay.numerics import derivative, integrate
from delaunay.roulettes import (
    RouletteKind,
    RouletteSpec,
    family_constant_length,
    roulette_arclength,
    roulette_by_rolling,
    roulette_eval,
    roulette_jet,
    roulette_profile,
    roulette_speed,
    roulette_total_length,
)

SQ3, SQ2 = math.sqrt(3.0), math.sqrt(2.0)
KINDS = [k.value for k in RouletteKind]


def spec_strategy(kind):
    if kind == "catenary":
        return st.builds(lambda b: RouletteSpec.of(kind, None, b), st.floats(0.5, 3))
    if kind.startswith("undulary"):
        return st.builds(lambda a, q: RouletteSpec.of(kind, a, a * q), st.floats(0.5, 3), st.floats(0.2, 1.0))
    return st.builds(lambda a, b: RouletteSpec.of(kind, a, b), st.floats(0.5, 3), st.floats(0.5, 3))


def test_pairing_is_enforced():
    with pytest.raises(ValidationError):
        RouletteSpec(ConicSpec.ellipse(2, 1), RouletteKind.CATENARY)
    with pytest.raises(ValidationError):
        RouletteSpec(ConicSpec.hyperbola(2, 1), RouletteKind.UNDULARY1)
    with pytest.raises(ValidationError):
        RouletteSpec(ConicSpec.parabola(1), RouletteKind.NODARY2)
    with pytest.raises(ValidationError):
        RouletteSpec.of("catenary", None, 1.0, t_origin=math.inf)


def test_roulette_eval_examples(backend):
    assert roulette_eval(RouletteSpec.of("catenary", None, 1.0), 0.0) == pytest.approx((0.0, 1.0), abs=1e-15)
    assert roulette_eval(RouletteSpec.of("undulary1", 2, 1), 0.0) == pytest.approx((0.0, 2 - SQ3), abs=1e-15)
    assert roulette_eval(RouletteSpec.of("nodary2", 1, 1), 0.0) == pytest.approx((0.0, 1 + SQ2), abs=1e-15)


def test_catenary_closed_form(backend):
    spec = RouletteSpec.of("catenary", None, 1.4)
    for t in (-2.0, -0.3, 1.7):
        g, f = roulette_eval(spec, t)
        assert g == pytest.approx(1.4 * t, abs=1e-12)
        assert f == pytest.approx(1.4 * math.cosh(t), rel=1e-15)


def test_profile_matches_pointwise(backend):
    spec = RouletteSpec.of("nodary1", 1.3, 0.8, t_origin=0.4)
    ts = [2.0, -1.5, 0.4, 0.9, -0.2]
    gs, fs = roulette_profile(spec, ts)
    for t, g, f in zip(ts, gs, fs):
        p = roulette_eval(spec, t)
        assert g == pytest.approx(p.g, abs=1e-12)
        assert f == p.f


def test_origin_shift_translates_abscissa(backend):
    a = RouletteSpec.of("undulary2", 2.0, 0.9, 0.0)
    b = RouletteSpec.of("undulary2", 2.0, 0.9, 1.1)
    shift = roulette_eval(a, 1.1).g - roulette_eval(b, 1.1).g
    for t in (-0.7, 0.5, 2.9):
        assert roulette_eval(a, t).g - roulette_eval(b, t).g == pytest.approx(shift, abs=1e-12)


def test_jet_examples():
    j = roulette_jet(RouletteSpec.of("catenary", None, 1.0), 0.0)
    assert (j.f, j.g, j.fp, j.gp, j.fpp, j.gpp) == pytest.approx((1, 0, 0, 1, 1, 0), abs=1e-15)


@pytest.mark.parametrize("t", np.linspace(-3, 3, 13))
def test_undulary_speed_identity(t):
    spec = RouletteSpec.of("undulary1", 2, 1)
    j = roulette_jet(spec, t, abscissa=False)
    assert math.hypot(j.fp, j.gp) == pytest.approx(2 / (2 + SQ3 * math.cos(t)), rel=1e-14)


def test_jet_second_derivatives_match_differences():
    spec = RouletteSpec.of("nodary1", 1, 1)
    t = 0.7
    j = roulette_jet(spec, t)
    assert derivative(lambda x: roulette_eval(spec, x).f, t, 2) == pytest.approx(j.fpp, rel=1e-6)
    assert derivative(lambda x: roulette_eval(spec, x).g, t, 2) == pytest.approx(j.gpp, rel=1e-6)
    assert derivative(lambda x: roulette_eval(spec, x).f, t, 1) == pytest.approx(j.fp, rel=1e-8)
    assert derivative(lambda x: roulette_eval(spec, x).g, t, 1) == pytest.approx(j.gp, rel=1e-8)


@pytest.mark.parametrize("kind", KINDS)
def test_jet_matches_differences_of_closed_first_derivatives(kind):
    spec = RouletteSpec.of(kind, 1.6, 0.9)
    for t in (-1.2, 0.3, 1.9):
        j = roulette_jet(spec, t, abscissa=False)
        fp = lambda x: roulette_jet(spec, x, abscissa=False).fp
        gp = lambda x: roulette_jet(spec, x, abscissa=False).gp
        assert derivative(fp, t, 1) == pytest.approx(j.fpp, rel=1e-8, abs=1e-12)
        assert derivative(gp, t, 1) == pytest.approx(j.gpp, rel=1e-8, abs=1e-12)


def test_speed_examples():
    assert roulette_speed(RouletteSpec.of("catenary", None, 2.0), 0.0) == 2.0
    assert roulette_speed(RouletteSpec.of("undulary2", 2, 1), 0.0) == pytest.approx(2 / (2 - SQ3), rel=1e-14)
    assert roulette_speed(RouletteSpec.of("nodary2", 1, 1), 0.0) == pytest.approx(1 / (SQ2 - 1), rel=1e-14)


@pytest.mark.parametrize("kind", KINDS)
def test_speed_matches_jet(kind):
    spec = RouletteSpec.of(kind, 2.2, 1.3)
    for t in np.linspace(-2.5, 2.5, 11):
        j = roulette_jet(spec, t, abscissa=False)
        assert roulette_speed(spec, t) == pytest.approx(math.hypot(j.fp, j.gp), rel=1e-14)
        assert roulette_speed(spec, t) > 0


def test_arclength_examples():
    assert roulette_arclength(RouletteSpec.of("catenary", None, 1.0), 0, 1) == pytest.approx(math.sinh(1), abs=1e-15)
    a = 2.0
    pair = sum(roulette_arclength(RouletteSpec.of(k, a, 1.0), -math.pi / 2, math.pi / 2) for k in ("undulary1", "undulary2"))
    assert pair == pytest.approx(2 * math.pi * a, abs=1e-12)
    n1 = RouletteSpec.of("nodary1", 1, 1)
    assert roulette_total_length(n1) == pytest.approx(math.pi / 2, abs=1e-15)
    assert roulette_arclength(n1, -40, 40) == pytest.approx(math.pi / 2, abs=1e-15)


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_arclength_matches_quadrature(kind, data):
    spec = data.draw(spec_strategy(kind))
    t0 = data.draw(st.floats(-7, 7))
    t1 = data.draw(st.floats(-7, 7))
    lo, hi = min(t0, t1), max(t0, t1)
    quad = integrate(lambda z: roulette_speed(spec, z), lo, hi, 1e-13, 1e-13).value
    assert roulette_arclength(spec, lo, hi) == pytest.approx(quad, abs=1e-9, rel=1e-12)


def test_undulary_arclength_is_monotone_across_branch_points():
    spec = RouletteSpec.of("undulary1", 2.0, 0.5)
    ts = np.linspace(-10, 10, 401)
    s = [roulette_arclength(spec, 0.0, t) for t in ts]
    assert np.all(np.diff(s) > 0)


def test_total_length_rejects_undularies():
    with pytest.raises(ValidationError):
        roulette_total_length(RouletteSpec.of("undulary1", 2, 1))


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_rolling_oracle(kind, data):
    spec = data.draw(spec_strategy(kind))
    t = data.draw(st.floats(-3, 3))
    p, q = roulette_eval(spec, t), roulette_by_rolling(spec, t)
    assert q.g == pytest.approx(p.g, abs=1e-8)
    assert q.f == pytest.approx(p.f, abs=1e-8)


def test_rolling_examples():
    assert roulette_by_rolling(RouletteSpec.of("catenary", None, 1.0), 1.0) == pytest.approx((1.0, math.cosh(1)), abs=1e-12)
    assert roulette_by_rolling(RouletteSpec.of("undulary1", 2, 1), 0.0) == pytest.approx((0.0, 2 - SQ3), abs=1e-14)
    spec = RouletteSpec.of("nodary1", 1, 1)
    assert roulette_by_rolling(spec, 0.5) == pytest.approx(roulette_eval(spec, 0.5), abs=1e-8)


def test_family_constant_length_members():
    a = 1.3
    family = family_constant_length(a, 5, 6)
    assert len(family) == 11
    for pair in family:
        assert pair.first.conic.a == a
        assert pair.total_length() == pytest.approx(2 * math.pi * a, abs=1e-10)
    bs = [p.first.conic.b for p in family]
    assert bs[:5] == sorted(bs[:5], reverse=True)
    assert bs[5:] == sorted(bs[5:])


def test_family_numeric_total_length():
    for pair in family_constant_length(1.0, 3, 3):
        lo, hi = pair.t_range
        lo, hi = max(lo, -40.0), min(hi, 40.0)
        total = sum(
            integrate(lambda z, s=s: roulette_speed(s, z), lo, hi, 1e-12, 1e-12).value
            for s in (pair.first, pair.second)
        )
        assert total == pytest.approx(2 * math.pi, abs=1e-6)


def test_family_straight_segment_limit():
    (pair,) = family_constant_length(1.0, 1, 0)
    assert pair.first.conic.b == pair.first.conic.a
    ts = np.linspace(-math.pi / 2, math.pi / 2, 9)
    _, fs = roulette_profile(pair.first, ts)
    assert np.allclose(fs, 1.0, atol=1e-15)
    assert roulette_arclength(pair.first, -math.pi / 2, math.pi / 2) == pytest.approx(math.pi)


def test_family_large_b_splits_into_two_half_circles():
    # each nodary's length tends to pi a: together the circle of radius a
    (pair,) = family_constant_length(1.0, 0, 1)
    wide = RouletteSpec.of("nodary1", 1.0, 1e6)
    assert roulette_total_length(wide) == pytest.approx(math.pi, rel=1e-5)
    assert pair.total_length() == pytest.approx(2 * math.pi, abs=1e-12)


def test_family_rejects_bad_input():
    with pytest.raises(ValidationError):
        family_constant_length(0.0, 1, 1)
    with pytest.raises(ValidationError):
        family_constant_length(1.0, -1, 1)
