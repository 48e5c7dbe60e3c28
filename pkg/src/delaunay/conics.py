"""Parametric conics, their tangents, foci, pedal feet and arc length.

Parametrizations (``a, b > 0``)::

    parabola   (b sinh^2 t, 2 b sinh t)
    ellipse    (a cos t, b sin t)
    hyperbola  (a cosh t, b sinh t)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateError, ValidationError
from .numerics import DEFAULT_ABS_TOL, DEFAULT_REL_TOL, integrate


class ConicKind(enum.Enum):
    PARABOLA = "parabola"
    ELLIPSE = "ellipse"
    HYPERBOLA = "hyperbola"


class Point2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class ConicSpec:
    """A conic in standard position.

    ``a`` is ignored for parabolas (pass ``None``).  Ellipses need
    ``0 < b <= a``; ``b == a`` is the circle, whose roulette degenerates to
    a straight line (the cylinder).
    """

    kind: ConicKind
    a: float | None
    b: float

    def __post_init__(self):
        if not isinstance(self.kind, ConicKind):
            object.__setattr__(self, "kind", ConicKind(self.kind))
        b = self.b
        if not (math.isfinite(b) and b > 0):
            raise ValidationError(f"b must be a positive finite number, got {b!r}")
        if self.kind is ConicKind.PARABOLA:
            object.__setattr__(self, "a", None)
            return
        a = self.a
        if a is None or not (math.isfinite(a) and a > 0):
            raise ValidationError(f"a must be a positive finite number, got {a!r}")
        if self.kind is ConicKind.ELLIPSE and b > a:
            raise ValidationError(f"ellipse needs b <= a, got a={a!r}, b={b!r}")

    @classmethod
    def parabola(cls, b: float) -> "ConicSpec":
        return cls(ConicKind.PARABOLA, None, b)

    @classmethod
    def ellipse(cls, a: float, b: float) -> "ConicSpec":
        return cls(ConicKind.ELLIPSE, a, b)

    @classmethod
    def hyperbola(cls, a: float, b: float) -> "ConicSpec":
        return cls(ConicKind.HYPERBOLA, a, b)

    @property
    def c(self) -> float | None:
        """Focal distance; ``None`` for a parabola."""
        if self.kind is ConicKind.ELLIPSE:
            # (a - b)(a + b) keeps precision when b is close to a
            return math.sqrt(max((self.a - self.b) * (self.a + self.b), 0.0))
        if self.kind is ConicKind.HYPERBOLA:
            return math.hypot(self.a, self.b)
        return None


def _derivative(conic: ConicSpec, t: float) -> Point2:
    a, b = conic.a, conic.b
    if conic.kind is ConicKind.PARABOLA:
        return Point2(2.0 * b * math.sinh(t) * math.cosh(t), 2.0 * b * math.cosh(t))
    if conic.kind is ConicKind.ELLIPSE:
        return Point2(-a * math.sin(t), b * math.cos(t))
    return Point2(a * math.sinh(t), b * math.cosh(t))


def conic_point(conic: ConicSpec, t: float) -> Point2:
    a, b = conic.a, conic.b
    if conic.kind is ConicKind.PARABOLA:
        s = math.sinh(t)
        return Point2(b * s * s, 2.0 * b * s)
    if conic.kind is ConicKind.ELLIPSE:
        return Point2(a * math.cos(t), b * math.sin(t))
    return Point2(a * math.cosh(t), b * math.sinh(t))


def conic_tangent(conic: ConicSpec, t: float) -> tuple[Point2, Point2]:
    """Point on the conic and unit tangent in the direction of increasing t.

    The derivative never vanishes for valid axes, so degeneracy here means
    the parametrization overflowed.
    """
    try:
        d = _derivative(conic, t)
        p = conic_point(conic, t)
    except OverflowError:
        d = p = None
    norm = math.hypot(d.x, d.y) if d is not None else math.inf
    if norm == 0.0 or not math.isfinite(norm):
        raise DegenerateError(f"degenerate tangent at t={t!r} for {conic}")
    return p, Point2(d.x / norm, d.y / norm)


def conic_foci(conic: ConicSpec) -> list[Point2]:
    """Foci, near focus first.

    The parabola ``(b sinh^2 t, 2 b sinh t)`` is ``y^2 = 4 b x``, with its
    single focus at ``(b, 0)``.
    """
    if conic.kind is ConicKind.PARABOLA:
        return [Point2(conic.b, 0.0)]
    c = conic.c
    return [Point2(c, 0.0), Point2(-c, 0.0)]


def pedal_foot(conic: ConicSpec, focus_index: int, t: float) -> Point2:
    """Foot of the perpendicular from a focus onto the tangent line at t."""
    foci = conic_foci(conic)
    if not 0 <= focus_index < len(foci):
        raise ValidationError(f"focus_index {focus_index!r} invalid for a {conic.kind.value}")
    focus = foci[focus_index]
    p, u = conic_tangent(conic, t)
    s = (focus.x - p.x) * u.x + (focus.y - p.y) * u.y
    return Point2(p.x + s * u.x, p.y + s * u.y)


def conic_speed(conic: ConicSpec, t: float) -> float:
    """``|d/dt conic_point|`` from the closed-form integrands."""
    a, b = conic.a, conic.b
    if conic.kind is ConicKind.PARABOLA:
        return 2.0 * b * math.cosh(t) ** 2
    if conic.kind is ConicKind.ELLIPSE:
        c = conic.c
        return math.sqrt(a * a - (c * math.cos(t)) ** 2)
    c = conic.c
    return math.sqrt((c * math.cosh(t)) ** 2 - a * a)


def conic_arclength(
    conic: ConicSpec,
    t0: float,
    t1: float,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
) -> float:
    """Arc length from ``t0`` to ``t1``; negative if ``t1 < t0``.

    Parabola: ``b (t + sinh t cosh t)`` in closed form.  Ellipse and
    hyperbola: adaptive quadrature of :func:`conic_speed`.
    """
    if conic.kind is ConicKind.PARABOLA:
        def prim(t):
            return conic.b * (t + math.sinh(t) * math.cosh(t))

        return prim(t1) - prim(t0)
    lo, hi, sign = (t0, t1, 1.0) if t0 <= t1 else (t1, t0, -1.0)
    res = integrate(lambda z: conic_speed(conic, z), lo, hi, abs_tol, rel_tol)
    return sign * res.value
