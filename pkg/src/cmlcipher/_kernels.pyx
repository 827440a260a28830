# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``.

Mirrors the pure-Python kernels operation for operation so that both
backends emit bit-identical mask streams (same libm, same expression
order, no fast-math / FP contraction -- see setup.py).  Change nothing
here without changing ``_kernels_py.py`` to match.
"""

import numpy as np

from libc.math cimport atan, fabs, floor, remainder, sqrt, tan, M_PI, M_PI_2

cdef double X_CAP = 1e15
cdef double MIN_STATE = 1e-12
cdef double POLE_EPS = 1e-12
cdef double SCALE = 1e14


cpdef double f1_raw(double x, double a, long n) noexcept nogil:
    """Tangent-conjugate map (1/a^2) * tan^2(n * arctan(sqrt(x))), capped."""
    cdef double arg, t, v
    arg = n * atan(sqrt(x))
    if fabs(remainder(arg - M_PI_2, M_PI)) < POLE_EPS:
        return X_CAP
    t = tan(arg)
    v = (t * t) / (a * a)
    if not (v <= X_CAP):
        v = X_CAP
    return v


cpdef double f2_raw(double x, double a, long n) noexcept nogil:
    """Cotangent-conjugate map (1/a^2) * cot^2(n * arctan(x^-1/2)), capped."""
    cdef double arg, c, v
    if x == 0.0:
        x = MIN_STATE
    arg = n * atan(1.0 / sqrt(x))
    if fabs(remainder(arg, M_PI)) < POLE_EPS:
        return X_CAP
    c = 1.0 / tan(arg)
    v = (c * c) / (a * a)
    if not (v <= X_CAP):
        v = X_CAP
    return v


cpdef double logistic_raw(double x, double r) noexcept nogil:
    """One logistic-map step r*x*(1-x), clamped into [MIN_STATE, 1-MIN_STATE]."""
    cdef double y = r * x * (1.0 - x)
    if y < MIN_STATE:
        y = MIN_STATE
    elif y > 1.0 - MIN_STATE:
        y = 1.0 - MIN_STATE
    return y


def generate_masks(double x0, double y0, double eps0, double a1, long n1,
                   double a2, long n2, double logistic_r, bint eps_per_step,
                   long n_burn, long count, long long modulus):
    """Compiled lattice driver; see ``_kernels_py.generate_masks``."""
    mx_arr = np.empty(count, dtype=np.int64)
    my_arr = np.empty(count, dtype=np.int64)
    cdef long long[::1] mx = mx_arr
    cdef long long[::1] my = my_arr

    cdef double x = x0
    cdef double y = y0
    cdef double eps = eps0
    cdef double lx = eps0
    cdef double arg, t, c, fx, fy, gx, gy, xn, yn, xx, yy
    cdef long i, j
    cdef long total = n_burn + count

    with nogil:
        for i in range(total):
            arg = n1 * atan(sqrt(x))
            if fabs(remainder(arg - M_PI_2, M_PI)) < POLE_EPS:
                fx = X_CAP
            else:
                t = tan(arg)
                fx = (t * t) / (a1 * a1)
                if not (fx <= X_CAP):
                    fx = X_CAP

            yy = y if y != 0.0 else MIN_STATE
            arg = n2 * atan(1.0 / sqrt(yy))
            if fabs(remainder(arg, M_PI)) < POLE_EPS:
                gy = X_CAP
            else:
                c = 1.0 / tan(arg)
                gy = (c * c) / (a2 * a2)
                if not (gy <= X_CAP):
                    gy = X_CAP

            arg = n1 * atan(sqrt(y))
            if fabs(remainder(arg - M_PI_2, M_PI)) < POLE_EPS:
                fy = X_CAP
            else:
                t = tan(arg)
                fy = (t * t) / (a1 * a1)
                if not (fy <= X_CAP):
                    fy = X_CAP

            xx = x if x != 0.0 else MIN_STATE
            arg = n2 * atan(1.0 / sqrt(xx))
            if fabs(remainder(arg, M_PI)) < POLE_EPS:
                gx = X_CAP
            else:
                c = 1.0 / tan(arg)
                gx = (c * c) / (a2 * a2)
                if not (gx <= X_CAP):
                    gx = X_CAP

            xn = (1.0 - eps) * fx + eps * gy
            yn = (1.0 - eps) * fy + eps * gx
            if xn > 1.0:
                xn = xn / (1.0 + xn)
            if yn > 1.0:
                yn = yn / (1.0 + yn)
            x = xn
            y = yn

            if eps_per_step:
                lx = logistic_raw(lx, logistic_r)
                eps = lx

            if i >= n_burn:
                j = i - n_burn
                mx[j] = (<long long>floor(x * SCALE)) % modulus
                my[j] = (<long long>floor(y * SCALE)) % modulus

    return mx_arr, my_arr
