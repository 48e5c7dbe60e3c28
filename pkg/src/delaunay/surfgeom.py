"""Differential geometry of the surfaces of revolution ``(f cos v, f sin v, g)``.

Two independent routes are provided: a generic one driven by a profile jet
(first and second fundamental forms of any meridian), and closed-form tables
for catenoids, unduloids and the two nodoids.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from . import _kernels
from .errors import DegenerateError, ValidationError
from .numerics import DEFAULT_ABS_TOL, DEFAULT_REL_TOL
from .roulettes import ProfileJet, RouletteKind, RouletteSpec, roulette_eval, roulette_jet


class SurfaceKind(enum.Enum):
    CATENOID = "catenoid"
    UNDULOID = "unduloid"
    NODOID1 = "nodoid1"
    NODOID2 = "nodoid2"


_SURFACE_OF = {
    RouletteKind.CATENARY: SurfaceKind.CATENOID,
    RouletteKind.UNDULARY1: SurfaceKind.UNDULOID,
    RouletteKind.UNDULARY2: SurfaceKind.UNDULOID,
    RouletteKind.NODARY1: SurfaceKind.NODOID1,
    RouletteKind.NODARY2: SurfaceKind.NODOID2,
}


@dataclass(frozen=True)
class SurfaceSpec:
    roulette: RouletteSpec

    @property
    def kind(self) -> SurfaceKind:
        return _SURFACE_OF[self.roulette.kind]

    @classmethod
    def of(cls, kind, a=None, b=1.0, t_origin=0.0) -> "SurfaceSpec":
        """Shortcut taking a *roulette* kind, e.g. ``SurfaceSpec.of("nodary1", 1, 1)``."""
        return cls(RouletteSpec.of(kind, a, b, t_origin))


@dataclass(frozen=True)
class PatchDomain:
    t1: float
    t2: float
    v1: float = 0.0
    v2: float = 2.0 * math.pi

    def __post_init__(self):
        if not all(math.isfinite(x) for x in (self.t1, self.t2, self.v1, self.v2)):
            raise ValidationError("patch bounds must be finite")
        if not self.t1 < self.t2:
            raise ValidationError(f"need t1 < t2, got {self.t1!r}, {self.t2!r}")
        span = self.v2 - self.v1
        # an empty sweep (v1 == v2) is allowed and integrates to zero
        if not 0.0 <= span <= 2.0 * math.pi * (1.0 + 1e-12):
            raise ValidationError(f"need 0 <= v2 - v1 <= 2 pi, got {span!r}")

    @property
    def v_span(self) -> float:
        return self.v2 - self.v1


class Vec3(NamedTuple):
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class FundamentalForms:
    E: float
    F: float
    G: float
    L: float
    M: float
    N: float


@dataclass(frozen=True)
class CurvatureBundle:
    k1: float
    k2: float
    H: float
    K: float
    kg: float


def surface_point(spec: SurfaceSpec, t: float, v: float) -> Vec3:
    g, f = roulette_eval(spec.roulette, t)
    return Vec3(f * math.cos(v), f * math.sin(v), g)


def normal_from_jet(jet: ProfileJet, v: float) -> Vec3:
    """``x_t x x_v / |x_t x x_v|`` for a meridian jet."""
    speed = math.hypot(jet.fp, jet.gp)
    if speed == 0.0:
        raise DegenerateError("irregular profile jet: f' = g' = 0")
    return Vec3(-jet.gp * math.cos(v) / speed, -jet.gp * math.sin(v) / speed, jet.fp / speed)


def surface_normal(spec: SurfaceSpec, t: float, v: float) -> Vec3:
    """Unit normal from the closed forms of each surface kind."""
    r = spec.roulette
    b = r.conic.b
    cv, sv = math.cos(v), math.sin(v)
    if r.kind is RouletteKind.CATENARY:
        ch = math.cosh(t)
        return Vec3(-cv / ch, -sv / ch, math.tanh(t))
    a, c = r.conic.a, r.conic.c
    if spec.kind is SurfaceKind.UNDULOID:
        e = -c if r.kind is RouletteKind.UNDULARY2 else c
        w = math.sqrt(a * a - (e * math.cos(t)) ** 2)
        return Vec3(-b * cv / w, -b * sv / w, e * math.sin(t) / w)
    w = math.sqrt((c * math.cosh(t)) ** 2 - a * a)
    sign = 1.0 if spec.kind is SurfaceKind.NODOID1 else -1.0
    return Vec3(-sign * b * cv / w, -sign * b * sv / w, sign * c * math.sinh(t) / w)


def fundamental_forms(jet: ProfileJet) -> FundamentalForms:
    E = jet.fp * jet.fp + jet.gp * jet.gp
    if not E > 0.0:
        raise DegenerateError("irregular profile jet: f' = g' = 0")
    if not jet.f > 0.0:
        raise DegenerateError(f"profile touches the axis: f = {jet.f!r}")
    root = math.sqrt(E)
    return FundamentalForms(
        E=E,
        F=0.0,
        G=jet.f * jet.f,
        L=(jet.fp * jet.gpp - jet.fpp * jet.gp) / root,
        M=0.0,
        N=jet.f * jet.gp / root,
    )


def curvatures_generic(jet: ProfileJet) -> CurvatureBundle:
    """Principal, mean, Gaussian and parallel geodesic curvature of any meridian."""
    ff = fundamental_forms(jet)
    k1 = ff.L / ff.E
    k2 = ff.N / ff.G
    return CurvatureBundle(
        k1=k1,
        k2=k2,
        H=0.5 * (k1 + k2),
        K=(ff.L * ff.N) / (ff.E * ff.G),
        kg=jet.fp / (jet.f * math.sqrt(ff.E)),
    )


def fundamental_forms_closed_form(spec: SurfaceSpec, t: float) -> FundamentalForms:
    r = spec.roulette
    b = r.conic.b
    if spec.kind is SurfaceKind.CATENOID:
        e = (b * math.cosh(t)) ** 2
        return FundamentalForms(E=e, F=0.0, G=e, L=-b, M=0.0, N=b)
    a, c = r.conic.a, r.conic.c
    if spec.kind is SurfaceKind.UNDULOID:
        e = -c if r.kind is RouletteKind.UNDULARY2 else c
        ec = e * math.cos(t)
        return FundamentalForms(
            E=(a * b / (a + ec)) ** 2,
            F=0.0,
            G=b * b * (a - ec) / (a + ec),
            L=-a * b * b * ec / ((a * a - ec * ec) * (a + ec)),
            M=0.0,
            N=b * b / (a + ec),
        )
    cc = c * math.cosh(t)
    if spec.kind is SurfaceKind.NODOID1:
        return FundamentalForms(
            E=(a * b / (cc + a)) ** 2,
            F=0.0,
            G=b * b * (cc - a) / (cc + a),
            L=-a * b * b * cc / ((cc * cc - a * a) * (cc + a)),
            M=0.0,
            N=b * b / (cc + a),
        )
    return FundamentalForms(
        E=(a * b / (cc - a)) ** 2,
        F=0.0,
        G=b * b * (cc + a) / (cc - a),
        L=-a * b * b * cc / ((cc * cc - a * a) * (cc - a)),
        M=0.0,
        N=-b * b / (cc - a),
    )


def curvatures_closed_form(spec: SurfaceSpec, t: float) -> CurvatureBundle:
    """Tabulated curvatures; ``H`` is the constant of each Delaunay family."""
    r = spec.roulette
    b = r.conic.b
    if spec.kind is SurfaceKind.CATENOID:
        ch2 = math.cosh(t) ** 2
        return CurvatureBundle(
            k1=-1.0 / (b * ch2),
            k2=1.0 / (b * ch2),
            H=0.0,
            K=-1.0 / (b * b * ch2 * ch2),
            kg=math.sinh(t) / (b * ch2),
        )
    a, c = r.conic.a, r.conic.c
    if spec.kind is SurfaceKind.UNDULOID:
        e = -c if r.kind is RouletteKind.UNDULARY2 else c
        ec = e * math.cos(t)
        return CurvatureBundle(
            k1=-ec / (a * (a - ec)),
            k2=1.0 / (a - ec),
            H=0.5 / a,
            K=-ec / (a * (a - ec) ** 2),
            kg=e * math.sin(t) / (b * (a - ec)),
        )
    cc = c * math.cosh(t)
    cs = c * math.sinh(t)
    if spec.kind is SurfaceKind.NODOID1:
        return CurvatureBundle(
            k1=-cc / (a * (cc - a)),
            k2=1.0 / (cc - a),
            H=-0.5 / a,
            K=-cc / (a * (cc - a) ** 2),
            kg=cs / (b * (cc - a)),
        )
    return CurvatureBundle(
        k1=-cc / (a * (cc + a)),
        k2=-1.0 / (cc + a),
        H=-0.5 / a,
        K=cc / (a * (cc + a) ** 2),
        kg=-cs / (b * (cc + a)),
    )


def _boundary_term(spec: SurfaceSpec, t: float) -> float:
    """``f'/sqrt(E)``: kg times the parallel radius, i.e. ``k_g |x_v|``."""
    if spec.kind is SurfaceKind.CATENOID:
        return math.tanh(t)
    r = spec.roulette
    a, c = r.conic.a, r.conic.c
    if spec.kind is SurfaceKind.UNDULOID:
        e = -c if r.kind is RouletteKind.UNDULARY2 else c
        return e * math.sin(t) / math.sqrt(a * a - (e * math.cos(t)) ** 2)
    value = c * math.sinh(t) / math.sqrt((c * math.cosh(t)) ** 2 - a * a)
    return value if spec.kind is SurfaceKind.NODOID1 else -value


def total_curvature(spec: SurfaceSpec, patch: PatchDomain) -> float:
    """Closed-form integral of K over the patch."""
    return -patch.v_span * (_boundary_term(spec, patch.t2) - _boundary_term(spec, patch.t1))


def _integrate_builtin(spec, code, t0, t1, abs_tol, rel_tol):
    k = _kernels.active()
    value, _, _ = k.integrate(*_code(spec, code), t0, t1, abs_tol, rel_tol)
    return value


def _code(spec, code):
    family, a, b, c = spec.roulette.encoded()
    return family, code, a, b, c


def total_curvature_numeric(
    spec: SurfaceSpec,
    patch: PatchDomain,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """Quadrature of ``K |x_t| |x_v|``; the v-integral is exact."""
    k = _kernels.active()
    return patch.v_span * _integrate_builtin(spec, k.GAUSS, patch.t1, patch.t2, abs_tol, rel_tol)


def gauss_bonnet_residual(
    spec: SurfaceSpec,
    patch: PatchDomain,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """Numeric total curvature plus the boundary geodesic-curvature integrals.

    With the orientation induced on the boundary parallels this vanishes
    identically; the boundary terms use ``k_g |x_v|`` from the generic jet.
    """
    r = spec.roulette
    interior = total_curvature_numeric(spec, patch, abs_tol, rel_tol)
    j1 = roulette_jet(r, patch.t1, abscissa=False)
    j2 = roulette_jet(r, patch.t2, abscissa=False)
    kg_x1 = curvatures_generic(j1).kg * j1.f
    kg_x2 = curvatures_generic(j2).kg * j2.f
    return interior + patch.v_span * (kg_x2 - kg_x1)


def volume_of_revolution(
    spec: SurfaceSpec,
    t0: float,
    t1: float,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """Signed ``pi * int f^2 g' dt``; negative where the meridian runs backwards."""
    if not t0 <= t1:
        raise ValidationError(f"need t0 <= t1, got {t0!r}, {t1!r}")
    k = _kernels.active()
    return _integrate_builtin(spec, k.VOLUME, t0, t1, abs_tol, rel_tol)


def lateral_area(
    spec: SurfaceSpec,
    patch: PatchDomain,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    k = _kernels.active()
    return patch.v_span * _integrate_builtin(spec, k.AREA, patch.t1, patch.t2, abs_tol, rel_tol)
