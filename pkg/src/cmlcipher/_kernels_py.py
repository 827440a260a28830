"""Pure-Python implementation of the hot numeric kernels.

This module is the reference backend: the compiled extension in
``_kernels.pyx`` mirrors it operation for operation, so both produce
bit-identical streams on the same libm.  Keep the two in sync -- any change
to an arithmetic expression here must be replicated in the .pyx file.

Everything is plain IEEE-754 double arithmetic; the only calls are libm
functions that CPython's ``math`` module forwards to directly.
"""

import math

import numpy as np

# Shared numeric policy constants.  Results beyond X_CAP (or non-finite)
# are capped; tangent/cotangent arguments closer than POLE_EPS to a pole
# short-circuit to X_CAP; map state never goes below MIN_STATE where a
# positive value is required.
X_CAP = 1e15
MIN_STATE = 1e-12
POLE_EPS = 1e-12

_PI = math.pi
_PI_2 = math.pi / 2.0
_SCALE = 1e14


def f1_raw(x, a, n):
    """Tangent-conjugate map (1/a^2) * tan^2(n * arctan(sqrt(x))), capped."""
    arg = n * math.atan(math.sqrt(x))
    if math.fabs(math.remainder(arg - _PI_2, _PI)) < POLE_EPS:
        return X_CAP
    t = math.tan(arg)
    v = (t * t) / (a * a)
    if not (v <= X_CAP):
        v = X_CAP
    return v


def f2_raw(x, a, n):
    """Cotangent-conjugate map (1/a^2) * cot^2(n * arctan(x^-1/2)), capped.

    x == 0 is remapped to MIN_STATE so the map stays total on [0, inf).
    """
    if x == 0.0:
        x = MIN_STATE
    arg = n * math.atan(1.0 / math.sqrt(x))
    if math.fabs(math.remainder(arg, _PI)) < POLE_EPS:
        return X_CAP
    c = 1.0 / math.tan(arg)
    v = (c * c) / (a * a)
    if not (v <= X_CAP):
        v = X_CAP
    return v


def logistic_raw(x, r):
    """One logistic-map step r*x*(1-x), clamped into [MIN_STATE, 1-MIN_STATE]."""
    y = r * x * (1.0 - x)
    if y < MIN_STATE:
        y = MIN_STATE
    elif y > 1.0 - MIN_STATE:
        y = 1.0 - MIN_STATE
    return y


def generate_masks(x0, y0, eps0, a1, n1, a2, n2, logistic_r, eps_per_step,
                   n_burn, count, modulus):
    """Drive the two-site lattice and quantize its trajectory into masks.

    Runs ``n_burn`` discarded warm-up steps from (x0, y0), then emits
    ``count`` pairs ``floor(state * 1e14) mod modulus`` -- one lattice step
    per pair, quantizing both sites of the post-step state.  With
    ``eps_per_step`` the coupling strength advances along the logistic
    orbit after every step; otherwise it stays at eps0.

    Returns two int64 arrays (mx, my) of length ``count``.  States are
    always <= 1.0 when quantized (the squash rule guarantees it), so the
    product with 1e14 stays well inside exact integer range.
    """
    mx = np.empty(count, dtype=np.int64)
    my = np.empty(count, dtype=np.int64)

    x = x0
    y = y0
    eps = eps0
    lx = eps0

    atan = math.atan
    sqrt = math.sqrt
    tan = math.tan
    fabs = math.fabs
    remainder = math.remainder
    floor = math.floor

    total = n_burn + count
    for i in range(total):
        # f1(x), f2(y), f1(y), f2(x) -- all from the pre-step state.
        arg = n1 * atan(sqrt(x))
        if fabs(remainder(arg - _PI_2, _PI)) < POLE_EPS:
            fx = X_CAP
        else:
            t = tan(arg)
            fx = (t * t) / (a1 * a1)
            if not (fx <= X_CAP):
                fx = X_CAP

        yy = y if y != 0.0 else MIN_STATE
        arg = n2 * atan(1.0 / sqrt(yy))
        if fabs(remainder(arg, _PI)) < POLE_EPS:
            gy = X_CAP
        else:
            c = 1.0 / tan(arg)
            gy = (c * c) / (a2 * a2)
            if not (gy <= X_CAP):
                gy = X_CAP

        arg = n1 * atan(sqrt(y))
        if fabs(remainder(arg - _PI_2, _PI)) < POLE_EPS:
            fy = X_CAP
        else:
            t = tan(arg)
            fy = (t * t) / (a1 * a1)
            if not (fy <= X_CAP):
                fy = X_CAP

        xx = x if x != 0.0 else MIN_STATE
        arg = n2 * atan(1.0 / sqrt(xx))
        if fabs(remainder(arg, _PI)) < POLE_EPS:
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
            mx[j] = int(floor(x * _SCALE)) % modulus
            my[j] = int(floor(y * _SCALE)) % modulus

    return mx, my
