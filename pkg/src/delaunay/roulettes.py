"""Roulettes of conic foci rolled along a line: catenary, undularies, nodaries.

A roulette is returned as a meridian ``(g(t), f(t))``: ``g`` runs along the
rolling line (the future axis of revolution) and ``f > 0`` is the distance
to it.  The second-focus curves are evaluated through the first-focus
formulas with a sign flip (``c -> -c`` for ellipses, ``a -> -a`` for
hyperbolas), which reproduces the rolling construction exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .conics import ConicKind, ConicSpec, conic_arclength, conic_foci, conic_tangent
from .errors import ValidationError
from .numerics import DEFAULT_ABS_TOL, DEFAULT_REL_TOL


class RouletteKind(enum.Enum):
    CATENARY = "catenary"
    UNDULARY1 = "undulary1"
    UNDULARY2 = "undulary2"
    NODARY1 = "nodary1"
    NODARY2 = "nodary2"


_CONIC_OF = {
    RouletteKind.CATENARY: ConicKind.PARABOLA,
    RouletteKind.UNDULARY1: ConicKind.ELLIPSE,
    RouletteKind.UNDULARY2: ConicKind.ELLIPSE,
    RouletteKind.NODARY1: ConicKind.HYPERBOLA,
    RouletteKind.NODARY2: ConicKind.HYPERBOLA,
}
_SECOND_FOCUS = {RouletteKind.UNDULARY2, RouletteKind.NODARY2}


@dataclass(frozen=True)
class RouletteSpec:
    conic: ConicSpec
    kind: RouletteKind
    t_origin: float = 0.0

    def __post_init__(self):
        if not isinstance(self.kind, RouletteKind):
            object.__setattr__(self, "kind", RouletteKind(self.kind))
        if _CONIC_OF[self.kind] is not self.conic.kind:
            raise ValidationError(
                f"{self.kind.value} needs a {_CONIC_OF[self.kind].value}, got {self.conic.kind.value}"
            )
        if not math.isfinite(self.t_origin):
            raise ValidationError(f"t_origin must be finite, got {self.t_origin!r}")

    @classmethod
    def of(cls, kind, a: float | None = None, b: float = 1.0, t_origin: float = 0.0) -> "RouletteSpec":
        """Build from a roulette kind and conic axes (``a`` unused for catenaries)."""
        kind = RouletteKind(kind)
        conic = ConicSpec(_CONIC_OF[kind], a, b)
        return cls(conic, kind, t_origin)

    @property
    def focus_index(self) -> int:
        return 1 if self.kind in _SECOND_FOCUS else 0

    def encoded(self) -> tuple[int, float, float, float]:
        """``(family, a, b, c)`` with the sign conventions of the kernels."""
        k = _kernels.active()
        conic = self.conic
        if self.kind is RouletteKind.CATENARY:
            return k.CATENARY, 0.0, conic.b, 0.0
        if conic.kind is ConicKind.ELLIPSE:
            c = -conic.c if self.kind is RouletteKind.UNDULARY2 else conic.c
            return k.ELLIPSE, conic.a, conic.b, c
        a = -conic.a if self.kind is RouletteKind.NODARY2 else conic.a
        return k.HYPERBOLA, a, conic.b, conic.c


class ProfilePoint(NamedTuple):
    g: float
    f: float


@dataclass(frozen=True)
class ProfileJet:
    f: float
    g: float
    fp: float
    gp: float
    fpp: float
    gpp: float


def roulette_eval(
    spec: RouletteSpec,
    t: float,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> ProfilePoint:
    """Meridian point ``(g, f)`` at parameter ``t``.

    ``g(t) = s(t_origin, t) - d(t)``, conic arc length minus the pedal
    offset; it is accumulated here as ``-d(t_origin) + int g'`` which is the
    same quantity without the cancellation of two large terms.
    """
    gs, fs = _kernels.active().profile(*spec.encoded(), spec.t_origin, [float(t)], abs_tol, rel_tol)
    return ProfilePoint(gs[0], fs[0])


def roulette_profile(
    spec: RouletteSpec,
    ts: Sequence[float],
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`roulette_eval`; returns arrays ``(g, f)``."""
    ts = [float(t) for t in ts]
    gs, fs = _kernels.active().profile(*spec.encoded(), spec.t_origin, ts, abs_tol, rel_tol)
    return np.asarray(gs, dtype=float), np.asarray(fs, dtype=float)


def roulette_jet(spec: RouletteSpec, t: float, abscissa: bool = True) -> ProfileJet:
    """Value and first two t-derivatives of ``f`` and ``g``.

    The derivatives are closed form.  ``abscissa=False`` skips the
    quadrature behind ``g`` and stores ``nan`` there; the differential
    geometry never reads it.
    """
    f, fp, gp, fpp, gpp = _kernels.active().jet(*spec.encoded(), float(t))
    g = roulette_eval(spec, t).g if abscissa else math.nan
    return ProfileJet(f=f, g=g, fp=fp, gp=gp, fpp=fpp, gpp=gpp)


def roulette_speed(spec: RouletteSpec, t: float) -> float:
    """``|d/dt (g, f)|`` in closed form."""
    conic = spec.conic
    b = conic.b
    if spec.kind is RouletteKind.CATENARY:
        return b * math.cosh(t)
    a, c = conic.a, conic.c
    if spec.kind is RouletteKind.UNDULARY1:
        return a * b / (a + c * math.cos(t))
    if spec.kind is RouletteKind.UNDULARY2:
        return a * b / (a - c * math.cos(t))
    if spec.kind is RouletteKind.NODARY1:
        return a * b / (c * math.cosh(t) + a)
    return a * b / (c * math.cosh(t) - a)


def _arclength_primitive(spec: RouletteSpec, z: float) -> float:
    conic = spec.conic
    if spec.kind is RouletteKind.CATENARY:
        return conic.b * math.sinh(z)
    a, c = conic.a, conic.c
    if conic.kind is ConicKind.ELLIPSE:
        e = -c if spec.kind is RouletteKind.UNDULARY2 else c
        k = math.sqrt((a - e) / (a + e))
        # tan(z/2) jumps at odd multiples of pi; unwrap by whole periods
        half = 0.5 * z
        m = round(half / math.pi)
        r = half - m * math.pi
        return 2.0 * a * (math.atan2(k * math.sin(r), math.cos(r)) + m * math.pi)
    s = -a if spec.kind is RouletteKind.NODARY2 else a
    k = math.sqrt((c - s) / (c + s))
    return 2.0 * a * math.atan(k * math.tanh(0.5 * z))


def roulette_arclength(spec: RouletteSpec, t0: float, t1: float) -> float:
    """Closed-form arc length between ``t0`` and ``t1`` (signed if ``t1 < t0``).

    Undulary primitives are unwrapped across the ``tan(z/2)`` branch points
    so the result is continuous and monotone for any interval.
    """
    return _arclength_primitive(spec, t1) - _arclength_primitive(spec, t0)


def roulette_total_length(spec: RouletteSpec) -> float:
    """Length of a nodary over the whole real line (limit ``tanh -> +-1``)."""
    if spec.conic.kind is not ConicKind.HYPERBOLA:
        raise ValidationError("total length over the real line is defined for nodaries only")
    a, c = spec.conic.a, spec.conic.c
    s = -a if spec.kind is RouletteKind.NODARY2 else a
    return 4.0 * a * math.atan(math.sqrt((c - s) / (c + s)))


def roulette_by_rolling(
    spec: RouletteSpec,
    t: float,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> ProfilePoint:
    """The same meridian point, rebuilt from the rolling picture.

    The contact point P sits at arc length ``s(t_origin, t)`` on the line;
    the focus projects onto the tangent at the pedal foot Q, so the abscissa
    is ``s + <F - P, u>`` and the height is ``|F - Q|``.  Shares no code
    with :func:`roulette_eval` beyond the conic parametrization.
    """
    conic = spec.conic
    focus = conic_foci(conic)[spec.focus_index]
    p, u = conic_tangent(conic, t)
    along = (focus.x - p.x) * u.x + (focus.y - p.y) * u.y
    qx, qy = p.x + along * u.x, p.y + along * u.y
    s = conic_arclength(conic, spec.t_origin, t, abs_tol, rel_tol)
    return ProfilePoint(s + along, math.hypot(focus.x - qx, focus.y - qy))


@dataclass(frozen=True)
class RoulettePair:
    """Both focal roulettes of one conic and the parameter range they share."""

    first: RouletteSpec
    second: RouletteSpec
    t_range: tuple[float, float]

    def total_length(self) -> float:
        if self.first.conic.kind is ConicKind.HYPERBOLA:
            return roulette_total_length(self.first) + roulette_total_length(self.second)
        lo, hi = self.t_range
        return roulette_arclength(self.first, lo, hi) + roulette_arclength(self.second, lo, hi)


def family_constant_length(a: float, count_ellipse: int, count_hyperbola: int) -> list[RoulettePair]:
    """Roulette pairs of total length ``2 pi a`` sharing the semi-axis ``a``.

    Ellipses sweep ``b = a, ..., a/count_ellipse`` (straight line first,
    flattening towards the semicircle of radius ``2a``); hyperbolas sweep
    ``b = a tan(theta)`` with ``theta`` evenly spaced in ``(0, pi/2)``, from
    the same semicircle towards the circle of radius ``a``.
    """
    if not (math.isfinite(a) and a > 0):
        raise ValidationError(f"a must be positive, got {a!r}")
    if count_ellipse < 0 or count_hyperbola < 0:
        raise ValidationError("member counts must be non-negative")
    members = []
    for k in range(count_ellipse):
        b = a * (count_ellipse - k) / count_ellipse
        conic = ConicSpec.ellipse(a, b)
        members.append(
            RoulettePair(
                RouletteSpec(conic, RouletteKind.UNDULARY1),
                RouletteSpec(conic, RouletteKind.UNDULARY2),
                (-0.5 * math.pi, 0.5 * math.pi),
            )
        )
    for k in range(count_hyperbola):
        theta = 0.5 * math.pi * (k + 1) / (count_hyperbola + 1)
        conic = ConicSpec.hyperbola(a, a * math.tan(theta))
        members.append(
            RoulettePair(
                RouletteSpec(conic, RouletteKind.NODARY1),
                RouletteSpec(conic, RouletteKind.NODARY2),
                (-math.inf, math.inf),
            )
        )
    return members
