"""Fit Delaunay surfaces to an enclosed volume and a boundary radius.

The symmetric patch ``t in [-t0, t0]`` of the first-focus meridian must
enclose volume ``V`` and meet radius ``r`` at both ends.  The two equations
are homogeneous in the conic axes (volume of degree 3, radius of degree 1),
which gives a one-parameter reduction in the axis ratio ``q = b/a``: fix
``q``, scale ``a`` to hit the radius, and only the volume is left.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .conics import ConicSpec
from .errors import BracketError, ConvergenceError, DelaunayError, SingularJacobianError, ValidationError
from .numerics import find_root_1d, integrate, solve_2d
from .roulettes import RouletteKind, RouletteSpec, roulette_eval
from .surfgeom import SurfaceSpec, volume_of_revolution

SOLVE_QUAD_TOL = 1e-10
VERIFY_QUAD_TOL = 1e-12
NEWTON_TOL = 1e-10
ACCEPT_TOL = 1e-8
MAX_NEWTON = 25


class FitKind(enum.Enum):
    NODOID1 = "nodoid"
    UNDULOID = "unduloid"
    CATENOID = "catenoid"


_ROULETTE = {
    FitKind.NODOID1: RouletteKind.NODARY1,
    FitKind.UNDULOID: RouletteKind.UNDULARY1,
    FitKind.CATENOID: RouletteKind.CATENARY,
}


@dataclass(frozen=True)
class FitRequest:
    surface_kind: FitKind
    volume: float
    radius: float
    t0: float | None = None

    def __post_init__(self):
        if not isinstance(self.surface_kind, FitKind):
            object.__setattr__(self, "surface_kind", FitKind(self.surface_kind))
        if not (self.volume > 0 and math.isfinite(self.volume)):
            raise ValidationError(f"volume must be positive, got {self.volume!r}")
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValidationError(f"radius must be positive, got {self.radius!r}")
        if self.surface_kind is not FitKind.CATENOID:
            if self.t0 is None or not (self.t0 > 0 and math.isfinite(self.t0)):
                raise ValidationError(f"t0 must be positive for {self.surface_kind.value}, got {self.t0!r}")


@dataclass(frozen=True)
class FitResult:
    """A solved surface; ``residuals`` are relative (volume/V - 1, radius/r - 1)."""

    kind: FitKind
    conic: ConicSpec
    t0: float
    residuals: tuple[float, float]
    iterations: int
    converged: bool = True

    @property
    def roulette(self) -> RouletteSpec:
        return RouletteSpec(self.conic, _ROULETTE[self.kind])


def _spec(kind: FitKind, a: float, b: float) -> SurfaceSpec:
    return SurfaceSpec.of(_ROULETTE[kind], a, b)


def _residuals(kind, a, b, req, t0, tol=SOLVE_QUAD_TOL):
    spec = _spec(kind, a, b)
    vol = volume_of_revolution(spec, -t0, t0, tol, tol)
    rad = roulette_eval(spec.roulette, t0).f
    return float(vol / req.volume - 1.0), float(rad / req.radius - 1.0)


def _independent_volume(kind: FitKind, conic: ConicSpec, t0: float) -> float:
    """Volume from the explicit integrands, bypassing the kernel backend."""
    b = conic.b
    if kind is FitKind.CATENOID:
        return math.pi * b**3 * (t0 + math.sinh(t0) * math.cosh(t0))
    a, c = conic.a, conic.c
    if kind is FitKind.NODOID1:
        def integrand(t):
            cc = c * math.cosh(t)
            return (cc - a) / ((cc + a) ** 2 * math.sqrt(cc * cc - a * a))

        scale = math.pi * a * b**4
    else:
        def integrand(t):
            cc = c * math.cos(t)
            return (a - cc) ** 2 / ((a * a - cc * cc) ** 1.5 * (a + cc))

        scale = math.pi * a * b**4
    res = integrate(integrand, -t0, t0, VERIFY_QUAD_TOL, VERIFY_QUAD_TOL)
    return scale * res.value


def verify_fit(result: FitResult, req: FitRequest) -> tuple[float, float]:
    """Relative residuals recomputed with an independent 1e-12 quadrature."""
    conic = result.conic
    vol = _independent_volume(result.kind, conic, result.t0)
    rad = roulette_eval(result.roulette, result.t0).f
    return float(vol / req.volume - 1.0), float(rad / req.radius - 1.0)


def _finish(kind, a, b, req, t0, iterations):
    conic = ConicSpec.parabola(b) if kind is FitKind.CATENOID else _spec(kind, a, b).roulette.conic
    result = FitResult(kind, conic, t0, (0.0, 0.0), iterations)
    res = verify_fit(result, req)
    ok = max(abs(res[0]), abs(res[1])) <= ACCEPT_TOL
    result = FitResult(kind, conic, t0, res, iterations, ok)
    if not ok:
        raise ConvergenceError(f"{kind.value} fit failed verification: residuals {res}", result)
    return result


def radius_constrained_point(kind: FitKind, q: float, req: FitRequest) -> tuple[float, float, float]:
    """For axis ratio ``q = b/a`` return ``(a, b, volume)`` with radius ``r`` at ``t0``."""
    t0 = req.t0
    unit = _spec(kind, 1.0, q)
    a = req.radius / roulette_eval(unit.roulette, t0).f
    vol = a**3 * volume_of_revolution(unit, -t0, t0, SOLVE_QUAD_TOL, SOLVE_QUAD_TOL)
    return a, q * a, vol


def _reduced_search(kind: FitKind, req: FitRequest, qs) -> tuple[float, float]:
    """Bracket the volume along the radius constraint and return ``(a, b)``.

    Brackets are tried from the first grid entry on, so the order of ``qs``
    decides which root wins when several exist.
    """
    def excess(q):
        return radius_constrained_point(kind, q, req)[2] / req.volume - 1.0

    prev_q, prev_v = None, None
    for q in qs:
        v = excess(q)
        if abs(v) <= 1e-13:
            a, b, _ = radius_constrained_point(kind, q, req)
            return a, b
        if prev_v is not None and (v < 0.0) != (prev_v < 0.0):
            root = find_root_1d(excess, prev_q, q, tol=1e-13)
            a, b, _ = radius_constrained_point(kind, root.root, req)
            return a, b
        prev_q, prev_v = q, v
    raise ConvergenceError(
        f"no {kind.value} with volume {req.volume} and radius {req.radius} at t0={req.t0}"
    )


def _newton(kind, req, x0, in_domain):
    def fn(a, b):
        return _residuals(kind, a, b, req, req.t0)

    return solve_2d(fn, x0, NEWTON_TOL, MAX_NEWTON, in_domain)


def fit_nodoid(req: FitRequest) -> FitResult:
    """Hyperbola axes whose first nodary encloses ``V`` with end radius ``r``.

    Damped Newton from ``a = b = r``; if that stalls, the ratio reduction
    brackets a root first and Newton polishes it.
    """
    if req.surface_kind is not FitKind.NODOID1:
        raise ValidationError("fit_nodoid needs a nodoid request")
    r = req.radius
    lo, hi = 1e-6 * r, 1e3 * r

    def in_domain(a, b):
        return lo < a < hi and lo < b < hi

    try:
        root = _newton(FitKind.NODOID1, req, (r, r), in_domain)
    except (ConvergenceError, SingularJacobianError, DelaunayError):
        qs = np.geomspace(1e-3, 1e3, 121)
        a, b = _reduced_search(FitKind.NODOID1, req, qs)
        root = _newton(FitKind.NODOID1, req, (a, b), in_domain)
    a, b = root.root
    return _finish(FitKind.NODOID1, a, b, req, req.t0, root.iterations)


def fit_unduloid(req: FitRequest) -> FitResult:
    """Ellipse axes (``b <= a``) whose first undulary meets ``V`` and ``r``.

    The start ``a = b = r`` is the cylinder on the edge of the domain, so
    the ratio reduction runs first, scanning from ``q = 1`` downwards and
    keeping the root closest to the cylinder; Newton then polishes.
    """
    if req.surface_kind is not FitKind.UNDULOID:
        raise ValidationError("fit_unduloid needs an unduloid request")
    qs = np.linspace(1.0, 0.02, 99)
    a, b = _reduced_search(FitKind.UNDULOID, req, qs)
    res = _residuals(FitKind.UNDULOID, a, b, req, req.t0)
    if max(abs(res[0]), abs(res[1])) <= NEWTON_TOL:
        return _finish(FitKind.UNDULOID, a, b, req, req.t0, 0)
    r = req.radius

    def in_domain(a_, b_):
        return 1e-6 * r < b_ <= a_ < 1e3 * r

    root = _newton(FitKind.UNDULOID, req, (a, b), in_domain)
    a, b = root.root
    return _finish(FitKind.UNDULOID, a, b, req, req.t0, root.iterations)


def _catenoid_volume_ratio(t0: float) -> float:
    ch = math.cosh(t0)
    return math.pi * (t0 + math.sinh(t0) * ch) / ch**3


def fit_catenoid(req: FitRequest) -> FitResult:
    """Solve ``b cosh t0 = r`` and ``pi b^3 (t0 + sinh t0 cosh t0) = V``.

    Eliminating ``b`` leaves ``V / r^3`` as a function of ``t0`` that rises
    from 0 to a maximum and decays again; the root on the rising branch (the
    wider neck) is returned.
    """
    if req.surface_kind is not FitKind.CATENOID:
        raise ValidationError("fit_catenoid needs a catenoid request")
    r = req.radius
    target = req.volume / r**3
    # the maximum of the ratio sits where 2 cosh^3 t = 3 sinh t (t + sinh t cosh t)
    peak = find_root_1d(
        lambda t: 2.0 * math.cosh(t) ** 3 - 3.0 * math.sinh(t) * (t + math.sinh(t) * math.cosh(t)),
        1e-9,
        5.0,
        tol=1e-14,
    ).root
    if target > _catenoid_volume_ratio(peak):
        raise ConvergenceError(
            f"volume {req.volume} exceeds the largest catenoid volume "
            f"{_catenoid_volume_ratio(peak) * r**3:.6g} for radius {r}"
        )
    try:
        root = find_root_1d(lambda t: _catenoid_volume_ratio(t) - target, 0.0, peak, tol=1e-15)
    except BracketError as exc:
        raise ConvergenceError(str(exc)) from exc
    t0 = root.root
    b = r / math.cosh(t0)
    return _finish(FitKind.CATENOID, None, b, req, t0, root.iterations)


def fit(req: FitRequest) -> FitResult:
    return {
        FitKind.NODOID1: fit_nodoid,
        FitKind.UNDULOID: fit_unduloid,
        FitKind.CATENOID: fit_catenoid,
    }[req.surface_kind](req)


@dataclass(frozen=True)
class FamilyEntry:
    """One member of a constant-volume family; ``result`` is ``None`` on failure."""

    kind: str
    t0: float | None
    result: FitResult | None
    message: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def converged(self) -> bool:
        return self.result is not None and self.result.converged


def constant_volume_family(
    volume: float,
    radius: float,
    t0_grid,
    kinds=(FitKind.UNDULOID, FitKind.CATENOID, FitKind.NODOID1),
    include_cylinder: bool = True,
) -> list[FamilyEntry]:
    """Surfaces sharing volume and end radius, ordered outside-in.

    Order: the cylinder (analytic, height ``V / (pi r^2)``), unduloids by
    ``t0``, the catenoid (its ``t0`` is solved for), nodoids by ``t0``.
    Failed fits are reported in their entry and do not stop the family.
    """
    if len(t0_grid) == 0:
        raise ValidationError("t0_grid must not be empty")
    kinds = [FitKind(k) for k in kinds]
    entries = []
    if include_cylinder:
        # the degenerate ellipse a = b = r rolls a line at height r; over
        # [-t0, t0] it advances 2 r t0, hence t0 = V / (2 pi r^3)
        t0 = volume / (2.0 * math.pi * radius**3)
        cyl = FitResult(FitKind.UNDULOID, ConicSpec.ellipse(radius, radius), t0, (0.0, 0.0), 0)
        entries.append(FamilyEntry("cylinder", t0, cyl, extra={"height": volume / (math.pi * radius**2)}))
    for kind in (FitKind.UNDULOID, FitKind.CATENOID, FitKind.NODOID1):
        if kind not in kinds:
            continue
        grid = [None] if kind is FitKind.CATENOID else sorted(t0_grid)
        for t0 in grid:
            try:
                result = fit(FitRequest(kind, volume, radius, t0))
                entries.append(FamilyEntry(kind.value, result.t0, result))
            except DelaunayError as exc:
                entries.append(FamilyEntry(kind.value, t0, None, str(exc)))
    return entries


def volume_probe(result: FitResult, req: FitRequest, count: int = 5, width: float = 0.05):
    """Sample volume against ``b`` on the radius constraint around a fit.

    Returns ``(bs, volumes, monotone)``; the ratio ``b/a`` is varied by
    ``+-width`` (capped at 1 for ellipses).  A strictly monotone sample
    means no second root is hiding next to the one found.
    """
    if result.kind is FitKind.CATENOID:
        raise ValidationError("the catenoid fit has no free axis ratio to probe")
    q = result.conic.b / result.conic.a
    hi = q * (1.0 + width)
    if result.kind is FitKind.UNDULOID:
        hi = min(hi, 1.0)
    probe_req = FitRequest(req.surface_kind, req.volume, req.radius, result.t0)
    bs, vols = [], []
    for qq in np.linspace(q * (1.0 - width), hi, count):
        _, b, vol = radius_constrained_point(result.kind, float(qq), probe_req)
        bs.append(float(b))
        vols.append(float(vol))
    order = np.argsort(bs)
    dv = np.diff(np.asarray(vols)[order])
    monotone = bool(np.all(dv > 0) or np.all(dv < 0))
    return bs, vols, monotone
