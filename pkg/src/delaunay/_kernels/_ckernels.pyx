# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and encoding as ``_pykernels``."""

from libc.math cimport sqrt, cos, sin, cosh, sinh, fabs, M_PI
from libc.stdlib cimport malloc, free

from ..errors import QuadratureError

DEF MAX_PANELS = 2000

CATENARY = 0
ELLIPSE = 1
HYPERBOLA = 2

ABSCISSA = 0
VOLUME = 1
AREA = 2
GAUSS = 3

BACKEND = "compiled"

cdef double[8] XGK = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
]
cdef double[8] WGK = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
]
cdef double[4] WG = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
]


cdef struct Jet:
    double f
    double fp
    double gp
    double fpp
    double gpp


cdef int c_jet(int family, double a, double b, double c, double t, Jet* out) nogil:
    cdef double co, si, ch, sh, w2, w, den, h, dh
    if family == 0:
        ch = cosh(t)
        sh = sinh(t)
        out.f = b * ch
        out.fp = b * sh
        out.gp = b
        out.fpp = b * ch
        out.gpp = 0.0
        return 0
    if family == 1:
        co = cos(t)
        si = sin(t)
        w2 = a * a - c * c * co * co
        w = sqrt(w2)
        den = a + c * co
        h = a * b / (w * den)
        dh = -h * (c * c * si * co / w2 - c * si / den)
        out.f = b * (a - c * co) / w
        out.fp = c * si * h
        out.gp = b * h
        out.fpp = c * co * h + c * si * dh
        out.gpp = b * dh
        return 0
    if family == 2:
        ch = cosh(t)
        sh = sinh(t)
        w2 = c * c * ch * ch - a * a
        w = sqrt(w2)
        den = c * ch + a
        h = a * b / (w * den)
        dh = -h * (c * c * ch * sh / w2 + c * sh / den)
        out.f = b * (c * ch - a) / w
        out.fp = c * sh * h
        out.gp = b * h
        out.fpp = c * ch * h + c * sh * dh
        out.gpp = b * dh
        return 0
    return -1


cdef double c_integrand(int family, int code, double a, double b, double c, double t) nogil:
    cdef Jet j
    cdef double speed2
    c_jet(family, a, b, c, t, &j)
    if code == 0:
        return j.gp
    if code == 1:
        return M_PI * j.f * j.f * j.gp
    speed2 = j.fp * j.fp + j.gp * j.gp
    if code == 2:
        return j.f * sqrt(speed2)
    return (j.fp * j.gpp - j.fpp * j.gp) * j.gp / (speed2 * sqrt(speed2))


cdef void c_gk15(int family, int code, double a, double b, double c,
                 double lo, double hi, double* value, double* err) nogil:
    cdef double center = 0.5 * (lo + hi)
    cdef double half = 0.5 * (hi - lo)
    cdef double fc = c_integrand(family, code, a, b, c, center)
    cdef double kronrod = WGK[7] * fc
    cdef double gauss = WG[3] * fc
    cdef double dx, pair
    cdef int j
    for j in range(7):
        dx = half * XGK[j]
        pair = (c_integrand(family, code, a, b, c, center - dx)
                + c_integrand(family, code, a, b, c, center + dx))
        kronrod += WGK[j] * pair
        if j % 2 == 1:
            gauss += WG[j // 2] * pair
    value[0] = kronrod * half
    err[0] = fabs((kronrod - gauss) * half)


cdef int c_integrate(int family, int code, double a, double b, double c,
                     double lo, double hi, double abs_tol, double rel_tol,
                     double* value, double* error, long* evaluations) nogil:
    """Global adaptive G7/K15; returns 0 on success, 1 on panel overflow."""
    cdef double* plo
    cdef double* phi
    cdef double* pval
    cdef double* perr
    cdef int n = 1, i, worst
    cdef double total, total_err, mid, v1, e1, v2, e2, tol
    if lo == hi:
        value[0] = 0.0
        error[0] = 0.0
        evaluations[0] = 0
        return 0
    plo = <double*> malloc(MAX_PANELS * sizeof(double))
    phi = <double*> malloc(MAX_PANELS * sizeof(double))
    pval = <double*> malloc(MAX_PANELS * sizeof(double))
    perr = <double*> malloc(MAX_PANELS * sizeof(double))
    plo[0] = lo
    phi[0] = hi
    c_gk15(family, code, a, b, c, lo, hi, &pval[0], &perr[0])
    evaluations[0] = 15
    total = pval[0]
    total_err = perr[0]
    while True:
        tol = rel_tol * fabs(total)
        if tol < abs_tol:
            tol = abs_tol
        if total_err <= tol:
            break
        if n >= MAX_PANELS:
            value[0] = total
            error[0] = total_err
            free(plo); free(phi); free(pval); free(perr)
            return 1
        worst = 0
        for i in range(1, n):
            if perr[i] > perr[worst]:
                worst = i
        mid = 0.5 * (plo[worst] + phi[worst])
        c_gk15(family, code, a, b, c, plo[worst], mid, &v1, &e1)
        c_gk15(family, code, a, b, c, mid, phi[worst], &v2, &e2)
        evaluations[0] += 30
        plo[n] = mid
        phi[n] = phi[worst]
        pval[n] = v2
        perr[n] = e2
        phi[worst] = mid
        pval[worst] = v1
        perr[worst] = e1
        n += 1
        total = 0.0
        total_err = 0.0
        for i in range(n):
            total += pval[i]
            total_err += perr[i]
    value[0] = total
    error[0] = total_err
    free(plo); free(phi); free(pval); free(perr)
    return 0


def jet(int family, double a, double b, double c, double t):
    """Return ``(f, f', g', f'', g'')`` of the roulette at ``t``."""
    cdef Jet j
    if c_jet(family, a, b, c, t, &j) != 0:
        raise ValueError(f"unknown roulette family {family!r}")
    return j.f, j.fp, j.gp, j.fpp, j.gpp


def pedal_offset(int family, double a, double b, double c, double t):
    cdef double co, ch
    if family == 0:
        return b * sinh(t) * cosh(t)
    if family == 1:
        co = cos(t)
        return c * sin(t) * (a - c * co) / sqrt(a * a - c * c * co * co)
    if family == 2:
        ch = cosh(t)
        return c * sinh(t) * (c * ch - a) / sqrt(c * c * ch * ch - a * a)
    raise ValueError(f"unknown roulette family {family!r}")


def integrand(int family, int code, double a, double b, double c, double t):
    if not 0 <= family <= 2:
        raise ValueError(f"unknown roulette family {family!r}")
    if not 0 <= code <= 3:
        raise ValueError(f"unknown integrand code {code!r}")
    return c_integrand(family, code, a, b, c, t)


def integrate(int family, int code, double a, double b, double c,
              double lo, double hi, double abs_tol, double rel_tol):
    """``(value, error_estimate, evaluations)`` of a built-in integrand."""
    cdef double value, err
    cdef long evals
    cdef int status
    if not lo <= hi:
        raise ValueError(f"integration bounds out of order: a={lo!r} > b={hi!r}")
    if abs_tol <= 0 or rel_tol <= 0:
        raise ValueError("tolerances must be positive")
    if not 0 <= family <= 2 or not 0 <= code <= 3:
        raise ValueError(f"unknown family/code {family!r}/{code!r}")
    with nogil:
        status = c_integrate(family, code, a, b, c, lo, hi, abs_tol, rel_tol,
                             &value, &err, &evals)
    if status != 0:
        raise QuadratureError(
            f"no convergence on [{lo}, {hi}] after {MAX_PANELS} panels "
            f"(error estimate {err:.3e})",
            estimate=value,
            error_estimate=err,
        )
    return value, err, evals


def profile(int family, double a, double b, double c, double t_origin, ts,
            double abs_tol, double rel_tol):
    """Abscissae and radii at every parameter in ``ts`` (lists, input order)."""
    cdef Py_ssize_t n = len(ts)
    cdef list gs = [0.0] * n
    cdef list fs = [0.0] * n
    cdef double g0 = -pedal_offset(family, a, b, c, t_origin)
    cdef double prev_t, acc, t, lo, hi, value, err, sign
    cdef long evals
    cdef int status
    cdef Jet j
    order = sorted(range(n), key=lambda i: ts[i])
    above = [i for i in order if ts[i] >= t_origin]
    below = [i for i in reversed(order) if ts[i] < t_origin]
    for chain, sign in ((above, 1.0), (below, -1.0)):
        prev_t = t_origin
        acc = g0
        for i in chain:
            t = ts[i]
            if family == 0:
                acc = g0 + b * (t - t_origin)
            elif t != prev_t:
                if sign > 0:
                    lo, hi = prev_t, t
                else:
                    lo, hi = t, prev_t
                status = c_integrate(family, 0, a, b, c, lo, hi, abs_tol, rel_tol,
                                     &value, &err, &evals)
                if status != 0:
                    raise QuadratureError(
                        f"no convergence on [{lo}, {hi}]", estimate=value, error_estimate=err
                    )
                acc += sign * value
            gs[i] = acc
            c_jet(family, a, b, c, t, &j)
            fs[i] = j.f
            prev_t = t
    return gs, fs
