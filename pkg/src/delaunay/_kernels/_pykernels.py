"""Pure-Python hot kernels (fallback for the compiled ``_ckernels``).

Roulettes are encoded as ``(family, a, b, c)``:

* ``CATENARY``: only ``b`` is used.
* ``ELLIPSE``: ``a`` semi-major axis, ``c`` the *signed* focal distance.
  ``+c`` is the near focus (first undulary), ``-c`` the far one.
* ``HYPERBOLA``: ``a`` the *signed* semi-axis, ``c`` the focal distance.
  ``+a`` is the near focus (first nodary), ``-a`` the far one.

Flipping those signs maps the first-focus formulas onto the second-focus
curve, so every kernel below is written once per conic.
"""

import math

from ..numerics import integrate as _integrate

CATENARY = 0
ELLIPSE = 1
HYPERBOLA = 2

ABSCISSA = 0  # g'
VOLUME = 1  # pi f^2 g'
AREA = 2  # f |x_t|
GAUSS = 3  # K |x_t| |x_v|

BACKEND = "python"


def jet(family, a, b, c, t):
    """Return ``(f, f', g', f'', g'')`` of the roulette at ``t``."""
    if family == CATENARY:
        ch = math.cosh(t)
        sh = math.sinh(t)
        return b * ch, b * sh, b, b * ch, 0.0
    if family == ELLIPSE:
        co = math.cos(t)
        si = math.sin(t)
        w2 = a * a - c * c * co * co
        w = math.sqrt(w2)
        den = a + c * co
        h = a * b / (w * den)
        dh = -h * (c * c * si * co / w2 - c * si / den)
        return (
            b * (a - c * co) / w,
            c * si * h,
            b * h,
            c * co * h + c * si * dh,
            b * dh,
        )
    if family == HYPERBOLA:
        ch = math.cosh(t)
        sh = math.sinh(t)
        w2 = c * c * ch * ch - a * a
        w = math.sqrt(w2)
        den = c * ch + a
        h = a * b / (w * den)
        dh = -h * (c * c * ch * sh / w2 + c * sh / den)
        return (
            b * (c * ch - a) / w,
            c * sh * h,
            b * h,
            c * ch * h + c * sh * dh,
            b * dh,
        )
    raise ValueError(f"unknown roulette family {family!r}")


def pedal_offset(family, a, b, c, t):
    """Signed distance from the pedal foot back to the rolling contact.

    The abscissa is the conic arc length minus this term.
    """
    if family == CATENARY:
        return b * math.sinh(t) * math.cosh(t)
    if family == ELLIPSE:
        co = math.cos(t)
        return c * math.sin(t) * (a - c * co) / math.sqrt(a * a - c * c * co * co)
    if family == HYPERBOLA:
        ch = math.cosh(t)
        return c * math.sinh(t) * (c * ch - a) / math.sqrt(c * c * ch * ch - a * a)
    raise ValueError(f"unknown roulette family {family!r}")


def integrand(family, code, a, b, c, t):
    f, fp, gp, fpp, gpp = jet(family, a, b, c, t)
    if code == ABSCISSA:
        return gp
    if code == VOLUME:
        return math.pi * f * f * gp
    speed2 = fp * fp + gp * gp
    if code == AREA:
        return f * math.sqrt(speed2)
    if code == GAUSS:
        return (fp * gpp - fpp * gp) * gp / (speed2 * math.sqrt(speed2))
    raise ValueError(f"unknown integrand code {code!r}")


def integrate(family, code, a, b, c, lo, hi, abs_tol, rel_tol):
    """``(value, error_estimate, evaluations)`` of a built-in integrand."""
    res = _integrate(lambda t: integrand(family, code, a, b, c, t), lo, hi, abs_tol, rel_tol)
    return res.value, res.error_estimate, res.evaluations


def profile(family, a, b, c, t_origin, ts, abs_tol, rel_tol):
    """Abscissae and radii of the roulette at every parameter in ``ts``.

    Integrates ``g'`` piecewise between the sorted samples so each piece is
    short; returns two lists aligned with ``ts``.
    """
    n = len(ts)
    gs = [0.0] * n
    fs = [0.0] * n
    g0 = -pedal_offset(family, a, b, c, t_origin)
    order = sorted(range(n), key=lambda i: ts[i])
    above = [i for i in order if ts[i] >= t_origin]
    below = [i for i in reversed(order) if ts[i] < t_origin]
    for chain, sign in ((above, 1.0), (below, -1.0)):
        prev_t, acc = t_origin, g0
        for i in chain:
            t = ts[i]
            if family == CATENARY:
                acc = g0 + b * (t - t_origin)
            elif t != prev_t:
                lo, hi = (prev_t, t) if sign > 0 else (t, prev_t)
                value, _, _ = integrate(family, ABSCISSA, a, b, c, lo, hi, abs_tol, rel_tol)
                acc += sign * value
            gs[i] = acc
            fs[i] = jet(family, a, b, c, t)[0]
            prev_t = t
    return gs, fs
