"""One-parameter chaotic maps and their trigonometric conjugates.

Four families live here, all pure functions:

* Chebyshev polynomials of both kinds (stable three-term recurrence),
* the rational unit-interval maps ``phi1``/``phi2`` built from them,
* their conjugates ``f1``/``f2`` acting on [0, inf) -- the tangent and
  cotangent maps that drive the coupled lattice,
* the logistic map used for the coupling-strength schedule.

The conjugacy change of variables is h(x) = (1-x)/x with inverse
1/(1+y); ``f1 = h . phi1 . h_inv`` and likewise for ``f2``, which the
test suite checks numerically over a parameter grid.

Numeric policy (shared with the compiled kernels): results are capped at
``X_CAP`` near tangent/cotangent poles, and logistic iterates are clamped
into [MIN_STATE, 1 - MIN_STATE].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._kernels_py import MIN_STATE, POLE_EPS, X_CAP, f1_raw, f2_raw, logistic_raw

__all__ = [
    "X_CAP",
    "MIN_STATE",
    "POLE_EPS",
    "MapParams",
    "LogisticParams",
    "chebyshev_t",
    "chebyshev_u",
    "phi1",
    "phi2",
    "f1",
    "f2",
    "conjugacy_h",
    "conjugacy_h_inv",
    "logistic_step",
]

# Logistic seeds on short cycles (0.5 -> r/4 -> ... decays toward 0 for
# r slightly below 4; 0.25/0.75 sit on the same forbidden orbit).
FORBIDDEN_LOGISTIC_SEEDS = (0.25, 0.5, 0.75)

LOGISTIC_R_MIN = 3.99996
LOGISTIC_R_MAX = 4.0


@dataclass(frozen=True)
class MapParams:
    """Control parameter ``a`` and integer degree ``n`` of one map."""

    a: float
    n: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"map degree n must be an integer >= 1, got {self.n!r}")
        if not (isinstance(self.a, (int, float)) and math.isfinite(self.a) and self.a > 0):
            raise ValueError(f"map parameter a must be a finite positive real, got {self.a!r}")
        object.__setattr__(self, "a", float(self.a))


@dataclass(frozen=True)
class LogisticParams:
    """Rate ``r`` in (3.99996, 4) and seed ``x0`` in (0, 1)."""

    r: float
    x0: float

    def __post_init__(self):
        if not (LOGISTIC_R_MIN < self.r < LOGISTIC_R_MAX):
            raise ValueError(
                f"logistic rate must lie in ({LOGISTIC_R_MIN}, {LOGISTIC_R_MAX}), got {self.r!r}"
            )
        if not (0.0 < self.x0 < 1.0):
            raise ValueError(f"logistic seed must lie in (0, 1), got {self.x0!r}")
        if self.x0 in FORBIDDEN_LOGISTIC_SEEDS:
            raise ValueError(
                f"logistic seed {self.x0} sits on a degenerate short orbit; pick another"
            )


def chebyshev_t(n: int, x: float) -> float:
    """Chebyshev polynomial of the first kind, T_n(x), by recurrence."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return 1.0
    t_prev, t = 1.0, x
    for _ in range(n - 1):
        t_prev, t = t, 2.0 * x * t - t_prev
    return t


def chebyshev_u(n: int, x: float) -> float:
    """Chebyshev polynomial of the second kind, U_n(x), by recurrence."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return 1.0
    u_prev, u = 1.0, 2.0 * x
    for _ in range(n - 1):
        u_prev, u = u, 2.0 * x * u - u_prev
    return u


def _check_unit_interval(x: float) -> None:
    if not (isinstance(x, (int, float)) and 0.0 <= x <= 1.0):
        raise ValueError(f"argument must lie in [0, 1], got {x!r}")


def phi1(x: float, p: MapParams) -> float:
    """First rational map: a^2 T^2 / (1 + (a^2-1) T^2) with T = T_n(sqrt(x)).

    Maps [0, 1] into [0, 1]; conjugate (under h) of the tangent map f1.
    """
    _check_unit_interval(x)
    t = chebyshev_t(p.n, math.sqrt(x))
    t2 = t * t
    a2 = p.a * p.a
    v = (a2 * t2) / (1.0 + (a2 - 1.0) * t2)
    return 1.0 if v > 1.0 else v  # true value is <= 1; trim rounding spill


def phi2(x: float, p: MapParams) -> float:
    """Second rational map: a^2 s^2 / (1 + (a^2-1) s^2).

    Here s^2 = x * U_{n-1}(sqrt(1-x))^2, i.e. s = sin(n * arccos(sqrt(1-x)))
    written via the second-kind recurrence.  This bounded form stays in
    [0, 1] for every degree and is the exact h-conjugate of the cotangent
    map f2 (the naive U_n(sqrt(1-x)) variant is neither).
    """
    _check_unit_interval(x)
    u = chebyshev_u(p.n - 1, math.sqrt(1.0 - x))
    s2 = x * (u * u)
    a2 = p.a * p.a
    v = (a2 * s2) / (1.0 + (a2 - 1.0) * s2)
    return 1.0 if v > 1.0 else v  # true value is <= 1; trim rounding spill


def f1(x: float, p: MapParams) -> float:
    """Tangent map (1/a^2) tan^2(n arctan(sqrt(x))) on [0, inf), capped at X_CAP."""
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x >= 0.0):
        raise ValueError(f"argument must be a finite real >= 0, got {x!r}")
    return f1_raw(float(x), p.a, p.n)


def f2(x: float, p: MapParams) -> float:
    """Cotangent map (1/a^2) cot^2(n arctan(x^-1/2)), capped at X_CAP.

    x == 0 is remapped to MIN_STATE so the map is total on [0, inf).
    """
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x >= 0.0):
        raise ValueError(f"argument must be a finite real >= 0, got {x!r}")
    return f2_raw(float(x), p.a, p.n)


def conjugacy_h(x: float) -> float:
    """Change of variables h(x) = (1-x)/x mapping (0, 1] onto [0, inf)."""
    if not (0.0 < x <= 1.0):
        raise ValueError(f"h is defined on (0, 1], got {x!r}")
    return (1.0 - x) / x


def conjugacy_h_inv(y: float) -> float:
    """Inverse change of variables 1/(1+y) mapping [0, inf) onto (0, 1]."""
    if not (isinstance(y, (int, float)) and math.isfinite(y) and y >= 0.0):
        raise ValueError(f"h_inv is defined on [0, inf), got {y!r}")
    return 1.0 / (1.0 + y)


def logistic_step(x: float, p: LogisticParams) -> float:
    """One step r*x*(1-x) of the logistic map, clamped away from {0, 1}."""
    if not (0.0 < x < 1.0):
        raise ValueError(f"logistic state must lie in (0, 1), got {x!r}")
    return logistic_raw(float(x), p.r)
