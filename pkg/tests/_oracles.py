"""Independent extended-precision reference implementations for the tests.

Everything here is computed with mpmath at 40 significant digits (far
beyond 80-bit extended precision) straight from the defining formulas, so
the production code under test shares no code path with these oracles.

The one exception is `logistic_shadow_orbit`, which deliberately runs at
53-bit precision: mpmath's correctly-rounded software arithmetic then
reproduces IEEE double semantics exactly, giving an independent
bit-for-bit check of long orbit computations that no higher-precision
oracle could provide (chaotic error growth of ~2x per step swamps any
fixed tolerance after a few dozen steps).
"""

from contextlib import contextmanager

import mpmath
from mpmath import mp, mpf

DPS = 40


@contextmanager
def _dps(n=DPS):
    old = mp.dps
    mp.dps = n
    try:
        yield
    finally:
        mp.dps = old


@contextmanager
def _prec(bits):
    old = mp.prec
    mp.prec = bits
    try:
        yield
    finally:
        mp.prec = old


def chebyshev_t_ref(n: int, x: float) -> float:
    """T_n(x) via the trigonometric/hyperbolic closed form."""
    with _dps():
        xm = mpf(x)
        if abs(xm) <= 1:
            val = mpmath.cos(n * mpmath.acos(xm))
        else:
            val = mpmath.cosh(n * mpmath.acosh(abs(xm)))
            if xm < 0 and n % 2 == 1:
                val = -val
        return float(val)


def chebyshev_u_ref(n: int, x: float) -> float:
    """U_n(x) via sin((n+1) theta)/sin(theta)."""
    with _dps():
        xm = mpf(x)
        if abs(xm) < 1:
            theta = mpmath.acos(xm)
            return float(mpmath.sin((n + 1) * theta) / mpmath.sin(theta))
        # endpoints / outside: fall back to the monomial sum
        total = mpf(0)
        for k in range((n // 2) + 1):
            total += ((-1) ** k) * mpmath.binomial(n - k, k) * (2 * xm) ** (n - 2 * k)
        return float(total)


def phi1_ref(x: float, a: float, n: int) -> float:
    with _dps():
        xm, am = mpf(x), mpf(a)
        t = mpmath.cos(n * mpmath.acos(mpmath.sqrt(xm)))
        t2 = t * t
        return float((am**2 * t2) / (1 + (am**2 - 1) * t2))


def phi2_ref(x: float, a: float, n: int) -> float:
    """Bounded second form via s = sin(n * arccos(sqrt(1-x)))."""
    with _dps():
        xm, am = mpf(x), mpf(a)
        s = mpmath.sin(n * mpmath.acos(mpmath.sqrt(1 - xm)))
        s2 = s * s
        return float((am**2 * s2) / (1 + (am**2 - 1) * s2))


def f1_ref(x: float, a: float, n: int) -> float:
    with _dps():
        xm, am = mpf(x), mpf(a)
        t = mpmath.tan(n * mpmath.atan(mpmath.sqrt(xm)))
        return float((t * t) / (am * am))


def f2_ref(x: float, a: float, n: int) -> float:
    with _dps():
        xm, am = mpf(x), mpf(a)
        t = mpmath.tan(n * mpmath.atan(1 / mpmath.sqrt(xm)))
        return float(1 / (t * t) / (am * am))


def logistic_ref_step(x: float, r: float) -> float:
    """One logistic step at 40 digits from an exact double input."""
    with _dps():
        xm, rm = mpf(x), mpf(r)
        return float(rm * xm * (1 - xm))


def logistic_shadow_orbit(x0: float, r: float, steps: int):
    """53-bit shadow orbit with the production clamp; bit-exact vs doubles."""
    out = []
    with _prec(53):
        x = mpf(x0)
        rm = mpf(r)
        lo = mpf(1e-12)
        hi = mpf(1.0) - mpf(1e-12)
        for _ in range(steps):
            x = rm * x * (1 - x)
            if x < lo:
                x = lo
            elif x > hi:
                x = hi
            out.append(float(x))
    return out


def cml_trajectory_ref(x0, y0, eps, a1, n1, a2, n2, steps):
    """Replay the lattice update at 40 digits, including cap and squash."""
    cap = mpf("1e15")
    min_state = mpf("1e-12")

    def mf1(x, a, n):
        t = mpmath.tan(n * mpmath.atan(mpmath.sqrt(x)))
        v = (t * t) / (a * a)
        return cap if v > cap else v

    def mf2(x, a, n):
        if x == 0:
            x = min_state
        t = mpmath.tan(n * mpmath.atan(1 / mpmath.sqrt(x)))
        v = 1 / (t * t) / (a * a)
        return cap if v > cap else v

    traj = []
    with _dps():
        x, y = mpf(x0), mpf(y0)
        e, am1, am2 = mpf(eps), mpf(a1), mpf(a2)
        for _ in range(steps):
            xn = (1 - e) * mf1(x, am1, n1) + e * mf2(y, am2, n2)
            yn = (1 - e) * mf1(y, am1, n1) + e * mf2(x, am2, n2)
            if xn > 1:
                xn = xn / (1 + xn)
            if yn > 1:
                yn = yn / (1 + yn)
            x, y = xn, yn
            traj.append((float(x), float(y)))
    return traj


def quantize_ref(x: float, modulus: int) -> int:
    """Independent reference for floor(x * 1e14) mod modulus.

    The correctly-rounded 53-bit product is recomputed in mpmath's
    software arithmetic (matching what one IEEE multiplication must
    yield), then floored and reduced with exact integers.
    """
    with _prec(53):
        prod = mpf(x) * mpf(10) ** 14
        return int(mpmath.floor(prod)) % modulus
