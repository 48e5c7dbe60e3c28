"""Numeric kernels: adaptive quadrature, Richardson differences, root finding.

Everything here works on plain Python callables.  The compiled backend in
``delaunay._kernels`` re-implements :func:`integrate` for the built-in
roulette integrands only; this module stays the reference path.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BracketError, ConvergenceError, QuadratureError, SingularJacobianError

EPS = np.finfo(float).eps

DEFAULT_ABS_TOL = 1e-10
DEFAULT_REL_TOL = 1e-10
MAX_INTERVALS = 2000

# 15-point Kronrod nodes (non-negative half) and weights, with the embedded
# 7-point Gauss weights on the odd-indexed nodes.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class RootResult:
    """Outcome of a 1-D or 2-D root search.

    ``root`` is a float for :func:`find_root_1d` and a ``(x, y)`` tuple for
    :func:`solve_2d`.
    """

    root: float | tuple[float, float]
    residual_norm: float
    iterations: int
    converged: bool


def gk15(fn: Callable[[float], float], lo: float, hi: float) -> tuple[float, float]:
    """One Gauss-Kronrod 7/15 panel: ``(kronrod_value, |kronrod - gauss|)``."""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc = fn(center)
    kronrod = _WGK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = half * _XGK[j]
        pair = fn(center - dx) + fn(center + dx)
        kronrod += _WGK[j] * pair
        if j % 2 == 1:
            gauss += _WG[j // 2] * pair
    return kronrod * half, abs((kronrod - gauss) * half)


def integrate(
    fn: Callable[[float], float],
    a: float,
    b: float,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    max_intervals: int = MAX_INTERVALS,
) -> QuadratureResult:
    """Globally adaptive Gauss-Kronrod (G7/K15) quadrature of ``fn`` on [a, b].

    The panel with the largest error estimate is bisected until the summed
    estimate drops below ``max(abs_tol, rel_tol * |value|)``.

    Raises:
        ValueError: if ``a > b`` or a tolerance is not positive.
        QuadratureError: when ``max_intervals`` panels do not suffice.
    """
    if not a <= b:
        raise ValueError(f"integration bounds out of order: a={a!r} > b={b!r}")
    if abs_tol <= 0 or rel_tol <= 0:
        raise ValueError("tolerances must be positive")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)

    value, err = gk15(fn, a, b)
    evaluations = 15
    # max-heap on error via negated keys; the counter keeps ordering stable
    heap = [(-err, 0, a, b, value)]
    counter = 1
    total, total_err = value, err
    while total_err > max(abs_tol, rel_tol * abs(total)):
        if len(heap) >= max_intervals:
            raise QuadratureError(
                f"no convergence on [{a}, {b}] after {len(heap)} panels "
                f"(error estimate {total_err:.3e})",
                estimate=total,
                error_estimate=total_err,
            )
        neg_err, _, lo, hi, v = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        v1, e1 = gk15(fn, lo, mid)
        v2, e2 = gk15(fn, mid, hi)
        evaluations += 30
        heapq.heappush(heap, (-e1, counter, lo, mid, v1))
        heapq.heappush(heap, (-e2, counter + 1, mid, hi, v2))
        counter += 2
        # re-sum instead of updating incrementally to avoid drift
        total = math.fsum(item[4] for item in heap)
        total_err = math.fsum(-item[0] for item in heap)
    return QuadratureResult(total, total_err, evaluations)


def _richardson(estimate: Callable[[float], float], h: float) -> float:
    d0 = estimate(h)
    d1 = estimate(h / 2)
    d2 = estimate(h / 4)
    r1 = (4.0 * d1 - d0) / 3.0
    r2 = (4.0 * d2 - d1) / 3.0
    return (16.0 * r2 - r1) / 15.0


def derivative(fn: Callable[[float], float], t: float, order: int = 1) -> float:
    """Richardson-extrapolated central difference of order 1 or 2.

    Two extrapolation levels remove the h^2 and h^4 terms, leaving an
    O(h^6) truncation error.  That is balanced against round-off (which
    grows like eps/h or eps/h^2) by a finest step of ``eps**(1/5)`` for
    order 1 and ``eps**(1/6)`` for order 2, times ``max(1, |t|)``.  The
    plain-difference steps ``eps**(1/3)``, ``eps**(1/4)`` would leave the
    round-off term dominant.
    """
    scale = max(1.0, abs(t))
    if order == 1:
        h = 4.0 * EPS ** 0.2 * scale

        def estimate(step):
            return (fn(t + step) - fn(t - step)) / (2.0 * step)

    elif order == 2:
        h = 4.0 * EPS ** (1.0 / 6.0) * scale
        f0 = fn(t)

        def estimate(step):
            return (fn(t + step) - 2.0 * f0 + fn(t - step)) / (step * step)

    else:
        raise ValueError(f"order must be 1 or 2, got {order!r}")
    return _richardson(estimate, h)


def find_root_1d(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> RootResult:
    """Bracketing root search: regula falsi (Illinois) with bisection fallback.

    Stops when ``|fn(x)| <= tol`` or the bracket is narrower than ``tol``.

    Raises:
        BracketError: if ``fn(lo)`` and ``fn(hi)`` share a strict sign.
    """
    if lo > hi:
        lo, hi = hi, lo
    flo, fhi = fn(lo), fn(hi)
    if flo == 0.0:
        return RootResult(lo, 0.0, 0, True)
    if fhi == 0.0:
        return RootResult(hi, 0.0, 0, True)
    if flo * fhi > 0.0:
        raise BracketError(f"no sign change on [{lo}, {hi}]: f(lo)={flo:.3e}, f(hi)={fhi:.3e}")

    side = 0
    x, fx = lo, flo
    for iteration in range(1, max_iter + 1):
        width = hi - lo
        x = (lo * fhi - hi * flo) / (fhi - flo)
        # secant point hugging an end of the bracket: bisect instead
        if not (lo + 0.01 * width < x < hi - 0.01 * width):
            x = 0.5 * (lo + hi)
        fx = fn(x)
        if abs(fx) <= tol:
            return RootResult(x, abs(fx), iteration, True)
        if (fx < 0.0) == (flo < 0.0):
            lo, flo = x, fx
            if side == -1:
                fhi *= 0.5
            side = -1
        else:
            hi, fhi = x, fx
            if side == 1:
                flo *= 0.5
            side = 1
        if hi - lo <= tol:
            return RootResult(x, abs(fx), iteration, True)
    return RootResult(x, abs(fx), max_iter, False)


def _jacobian(fn, x, fx):
    jac = np.empty((2, 2))
    for i in range(2):
        h = EPS ** (1.0 / 3.0) * max(1.0, abs(x[i]))
        xp = x.copy()
        xm = x.copy()
        xp[i] += h
        xm[i] -= h
        jac[:, i] = (np.asarray(fn(*xp), dtype=float) - np.asarray(fn(*xm), dtype=float)) / (2.0 * h)
    return jac


def solve_2d(
    fn: Callable[[float, float], Sequence[float]],
    x0: Sequence[float],
    tol: float = 1e-10,
    max_iter: int = 50,
    in_domain: Callable[[float, float], bool] | None = None,
) -> RootResult:
    """Damped Newton iteration for a 2x2 nonlinear system.

    The Jacobian comes from central differences.  Each Newton step is halved
    (up to 20 times) until the residual infinity-norm decreases and, if
    given, ``in_domain`` accepts the trial point.

    Raises:
        SingularJacobianError: the Jacobian cannot be inverted.
        ConvergenceError: iteration cap or failed line search; ``.result``
            holds the last iterate.
    """
    x = np.asarray(x0, dtype=float).copy()
    fx = np.asarray(fn(*x), dtype=float)
    norm = float(np.max(np.abs(fx)))
    for iteration in range(max_iter + 1):
        if norm <= tol:
            return RootResult((float(x[0]), float(x[1])), norm, iteration, True)
        if iteration == max_iter:
            break
        jac = _jacobian(fn, x, fx)
        scale = np.max(np.abs(jac))
        if scale == 0.0 or abs(np.linalg.det(jac)) <= 1e-14 * scale * scale:
            raise SingularJacobianError(f"singular Jacobian at {tuple(x)}: {jac.tolist()}")
        step = np.linalg.solve(jac, -fx)
        lam = 1.0
        for _ in range(21):
            trial = x + lam * step
            if in_domain is None or in_domain(*trial):
                ft = np.asarray(fn(*trial), dtype=float)
                trial_norm = float(np.max(np.abs(ft)))
                if np.isfinite(trial_norm) and trial_norm < norm:
                    break
            lam *= 0.5
        else:
            last = RootResult((float(x[0]), float(x[1])), norm, iteration, False)
            raise ConvergenceError(f"line search failed at {tuple(x)} (residual {norm:.3e})", last)
        x, fx, norm = trial, ft, trial_norm
    last = RootResult((float(x[0]), float(x[1])), norm, max_iter, False)
    raise ConvergenceError(f"no convergence in {max_iter} iterations (residual {norm:.3e})", last)
