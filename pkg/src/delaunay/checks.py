"""Invariant suite for a single surface, plus the finite-difference oracle.

Every check compares two computations that share as little code as
possible: closed forms against the generic pipeline, the rolling picture
against the integrated abscissa, quadrature against antiderivatives.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass

from .conics import ConicKind
from .numerics import derivative, integrate
from .roulettes import (
    ProfileJet,
    RouletteSpec,
    roulette_arclength,
    roulette_by_rolling,
    roulette_eval,
    roulette_jet,
    roulette_speed,
)
from .surfgeom import (
    CurvatureBundle,
    PatchDomain,
    SurfaceKind,
    SurfaceSpec,
    curvatures_closed_form,
    curvatures_generic,
    gauss_bonnet_residual,
    normal_from_jet,
    surface_normal,
    total_curvature,
    total_curvature_numeric,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float
    passed: bool

    def as_dict(self) -> dict:
        return asdict(self)


def expected_mean_curvature(spec: SurfaceSpec) -> float:
    kind = spec.kind
    if kind is SurfaceKind.CATENOID:
        return 0.0
    a = spec.roulette.conic.a
    return 0.5 / a if kind is SurfaceKind.UNDULOID else -0.5 / a


def parameter_range(spec: SurfaceSpec) -> tuple[float, float]:
    """Sampling range for random checks: a full period or ``|t| <= 2``."""
    if spec.roulette.conic.kind is ConicKind.ELLIPSE:
        return -math.pi, math.pi
    return -2.0, 2.0


def curvatures_finite_difference(spec: SurfaceSpec, t: float) -> CurvatureBundle:
    """Curvatures from Richardson differences of the evaluated meridian.

    The roulette origin is moved to ``t``; that only shifts ``g`` by a
    constant but keeps the sampled abscissas short integrals.
    """
    local = RouletteSpec(spec.roulette.conic, spec.roulette.kind, t)

    def f(x):
        return roulette_eval(local, x).f

    def g(x):
        return roulette_eval(local, x).g

    jet = ProfileJet(
        f=f(t),
        g=g(t),
        fp=derivative(f, t, 1),
        gp=derivative(g, t, 1),
        fpp=derivative(f, t, 2),
        gpp=derivative(g, t, 2),
    )
    return curvatures_generic(jet)


def bundle_distance(a: CurvatureBundle, b: CurvatureBundle, fields=("k1", "k2", "H", "K", "kg")) -> float:
    """Largest componentwise difference, relative to the bundle's own scale.

    Components that vanish (``H`` of a catenoid, ``K`` of a cylinder) are
    compared against ``max(|k1|, |k2|)`` instead of themselves.
    """
    scale = max(abs(b.k1), abs(b.k2), 1e-300)
    return max(abs(getattr(a, k) - getattr(b, k)) / max(abs(getattr(b, k)), scale) for k in fields)


def _check(name: str, value: float, tol: float) -> CheckResult:
    return CheckResult(name, float(value), tol, bool(value <= tol))


def run_checks(spec: SurfaceSpec, seed: int = 0, samples: int = 20) -> list[CheckResult]:
    """Run the invariant suite on ``spec`` with ``samples`` random parameters."""
    rng = random.Random(seed)
    lo, hi = parameter_range(spec)
    ts = [rng.uniform(lo, hi) for _ in range(samples)]
    r = spec.roulette
    results = []

    h_expected = expected_mean_curvature(spec)
    h_err = max(abs(curvatures_generic(roulette_jet(r, t, abscissa=False)).H - h_expected) for t in ts)
    results.append(_check("constant_mean_curvature", h_err, 1e-12 if spec.kind is SurfaceKind.CATENOID else 1e-10))

    cf_err = max(
        bundle_distance(curvatures_generic(roulette_jet(r, t, abscissa=False)), curvatures_closed_form(spec, t))
        for t in ts
    )
    results.append(_check("closed_form_vs_generic", cf_err, 1e-10))

    fd_err = max(bundle_distance(curvatures_finite_difference(spec, t), curvatures_closed_form(spec, t)) for t in ts)
    results.append(_check("finite_difference_oracle", fd_err, 1e-6))

    roll_err = 0.0
    for t in ts:
        p, q = roulette_eval(r, t), roulette_by_rolling(r, t)
        roll_err = max(roll_err, abs(p.g - q.g), abs(p.f - q.f))
    results.append(_check("rolling_construction", roll_err, 1e-8))

    arc_err = 0.0
    for t in ts:
        quad = integrate(lambda z: roulette_speed(r, z), min(0.0, t), max(0.0, t), 1e-13, 1e-13).value
        arc_err = max(arc_err, abs(abs(roulette_arclength(r, 0.0, t)) - quad))
    results.append(_check("arclength_antiderivative", arc_err, 1e-9))

    normal_err = 0.0
    for t in ts:
        v = rng.uniform(0.0, 2.0 * math.pi)
        n = surface_normal(spec, t, v)
        m = normal_from_jet(roulette_jet(r, t, abscissa=False), v)
        normal_err = max(normal_err, abs(math.hypot(*n) - 1.0), max(abs(x - y) for x, y in zip(n, m)))
    results.append(_check("unit_normal", normal_err, 1e-12))

    gb_err = tc_err = 0.0
    for _ in range(max(1, samples // 4)):
        t1, t2 = sorted(rng.uniform(lo, hi) for _ in range(2))
        patch = PatchDomain(t1, t2, 0.0, rng.uniform(1e-3, 2.0 * math.pi))
        gb_err = max(gb_err, abs(gauss_bonnet_residual(spec, patch)))
        tc_err = max(tc_err, abs(total_curvature(spec, patch) - total_curvature_numeric(spec, patch)))
    results.append(_check("gauss_bonnet", gb_err, 1e-6))
    results.append(_check("total_curvature", tc_err, 1e-6))
    return results
