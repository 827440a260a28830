"""Two-site coupled-lattice keystream generator.

The lattice update is

    X' = (1-eps) f1(X) + eps f2(Y)
    Y' = (1-eps) f1(Y) + eps f2(X)

computed simultaneously from the pre-step state, with any component > 1
squashed back to v/(1+v) so the next iterate stays in the maps'
well-conditioned region.  The coupling strength eps is a logistic-map
orbit value and, by default, stays fixed for the whole stream
(``eps_mode="per_step"`` re-steps it once per lattice step).

Each emitted step quantizes both sites to integers
``floor(state * 1e14) mod modulus``; the cipher layer works with the
resulting mask pairs.

The bulk generator (`mask_arrays`) runs on the selected kernel backend
(compiled extension when built, pure Python otherwise); `cml_step` is the
step-at-a-time reference path and the two are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from . import _backend
from .maps import (
    X_CAP,
    LogisticParams,
    MapParams,
    f1,
    f2,
    logistic_raw,
)

__all__ = [
    "EPS_MODES",
    "CIPHER_MODES",
    "CipherKey",
    "CmlState",
    "MaskPair",
    "derive_epsilon",
    "init_state",
    "cml_step",
    "quantize_mask",
    "mask_arrays",
    "keystream",
    "save_mask_file",
    "load_mask_file",
]

EPS_MODES = ("fixed", "per_step")
CIPHER_MODES = ("paper_literal", "repaired")

A_MIN, A_MAX = 0.25, 4.0
COUNT_MAX = 10**6
_SCALE_INT = 10**14


@dataclass(frozen=True)
class CipherKey:
    """Full secret key for the lattice cipher.

    ``x0``/``y0`` seed the two lattice sites, ``p1``/``p2`` parameterize the
    tangent and cotangent maps, ``lp`` and ``n_logistic`` define the
    coupling strength, and ``n_burn`` warm-up steps are discarded before
    the first mask is emitted.
    """

    x0: float
    y0: float
    p1: MapParams
    p2: MapParams
    lp: LogisticParams
    n_logistic: int = 100
    n_burn: int = 200
    eps_mode: str = "fixed"
    cipher_mode: str = "repaired"

    def __post_init__(self):
        if not (0.0 < self.x0 < 1.0) or not (0.0 < self.y0 < 1.0):
            raise ValueError("lattice seeds x0, y0 must lie in (0, 1)")
        if self.x0 == self.y0:
            raise ValueError(
                "x0 == y0 locks the symmetric lattice sites together forever"
            )
        for name, p in (("p1", self.p1), ("p2", self.p2)):
            if p.n < 2:
                raise ValueError(f"{name}.n must be >= 2 for cipher keys, got {p.n}")
            if not (A_MIN <= p.a <= A_MAX):
                raise ValueError(
                    f"{name}.a must lie in [{A_MIN}, {A_MAX}], got {p.a}"
                )
        if not (1 <= self.n_logistic <= COUNT_MAX):
            raise ValueError(f"n_logistic must lie in [1, {COUNT_MAX}]")
        if not (0 <= self.n_burn <= COUNT_MAX):
            raise ValueError(f"n_burn must lie in [0, {COUNT_MAX}]")
        if self.eps_mode not in EPS_MODES:
            raise ValueError(f"eps_mode must be one of {EPS_MODES}, got {self.eps_mode!r}")
        if self.cipher_mode not in CIPHER_MODES:
            raise ValueError(
                f"cipher_mode must be one of {CIPHER_MODES}, got {self.cipher_mode!r}"
            )

    def with_mode(self, cipher_mode: str) -> "CipherKey":
        """Copy of this key with a different cipher mode flag."""
        return replace(self, cipher_mode=cipher_mode)


@dataclass
class CmlState:
    """Evolving lattice state: both sites, coupling strength, step counter."""

    x: float
    y: float
    eps: float
    logistic_x: float
    step: int = 0


class MaskPair(NamedTuple):
    mx: int
    my: int


def derive_epsilon(lp: LogisticParams, n_logistic: int) -> float:
    """Coupling strength: the logistic orbit value after n_logistic steps."""
    if n_logistic < 1:
        raise ValueError("n_logistic must be >= 1")
    x = lp.x0
    for _ in range(n_logistic):
        x = logistic_raw(x, lp.r)
    return x


def init_state(k: CipherKey) -> CmlState:
    """Fresh lattice state for a key, before any burn-in."""
    eps = derive_epsilon(k.lp, k.n_logistic)
    return CmlState(x=k.x0, y=k.y0, eps=eps, logistic_x=eps, step=0)


def cml_step(s: CmlState, k: CipherKey) -> CmlState:
    """One lattice update; the reference (step-at-a-time) path.

    Both new components are computed from the pre-step (x, y); any
    component > 1 is squashed to v/(1+v).  In per-step mode the coupling
    strength advances one logistic step after the update.
    """
    fx = f1(s.x, k.p1)
    gy = f2(s.y, k.p2)
    fy = f1(s.y, k.p1)
    gx = f2(s.x, k.p2)
    xn = (1.0 - s.eps) * fx + s.eps * gy
    yn = (1.0 - s.eps) * fy + s.eps * gx
    if xn > 1.0:
        xn = xn / (1.0 + xn)
    if yn > 1.0:
        yn = yn / (1.0 + yn)
    eps = s.eps
    lx = s.logistic_x
    if k.eps_mode == "per_step":
        lx = logistic_raw(lx, k.lp.r)
        eps = lx
    return CmlState(x=xn, y=yn, eps=eps, logistic_x=lx, step=s.step + 1)


def quantize_mask(x: float, modulus: int) -> int:
    """floor(x * 1e14) mod modulus, exact integer arithmetic after the floor.

    The product is one IEEE double multiplication; everything after the
    floor is arbitrary-precision integer math, so there is no
    floating-point modulo anywhere.
    """
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise ValueError(f"state to quantize must be finite, got {x!r}")
    if not (0.0 <= x <= X_CAP):
        raise ValueError(f"state to quantize must lie in [0, {X_CAP:g}], got {x!r}")
    if not (2 <= modulus <= 2**31):
        raise ValueError(f"modulus must lie in [2, 2**31], got {modulus!r}")
    return int(math.floor(x * 1e14)) % modulus


def mask_arrays(k: CipherKey, count: int, modulus: int):
    """Bulk mask generation on the active backend.

    Returns two int64 arrays (mx, my) of length ``count`` with values in
    [0, modulus).  modulus == 1 is admitted (single-pixel images); every
    mask is then 0.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not (1 <= modulus <= 2**31):
        raise ValueError(f"modulus must lie in [1, 2**31], got {modulus!r}")
    eps = derive_epsilon(k.lp, k.n_logistic)
    return _backend.generate_masks(
        k.x0, k.y0, eps, k.p1.a, k.p1.n, k.p2.a, k.p2.n,
        k.lp.r, k.eps_mode == "per_step", k.n_burn, count, modulus,
    )


def keystream(k: CipherKey, count: int, modulus: int) -> list[MaskPair]:
    """The mask stream as a list of pairs, fully determined by the key."""
    mx, my = mask_arrays(k, count, modulus)
    return [MaskPair(int(a), int(b)) for a, b in zip(mx, my)]


def save_mask_file(path, mx, my, modulus: int) -> None:
    """Write a mask stream as text: first line "modulus count", then "mx my" pairs."""
    lines = [f"{modulus} {len(mx)}"]
    lines.extend(f"{int(a)} {int(b)}" for a, b in zip(mx, my))
    data = ("\n".join(lines) + "\n").encode("ascii")
    with open(path, "wb") as fh:
        fh.write(data)


def load_mask_file(path):
    """Read a mask-stream file; returns (mx, my, modulus) with int64 arrays."""
    with open(path, "rb") as fh:
        text = fh.read().decode("ascii")
    lines = text.split()
    modulus, count = int(lines[0]), int(lines[1])
    vals = [int(v) for v in lines[2:]]
    if len(vals) != 2 * count:
        raise ValueError(
            f"mask file {path} declares {count} pairs but carries {len(vals) // 2}"
        )
    mx = np.array(vals[0::2], dtype=np.int64)
    my = np.array(vals[1::2], dtype=np.int64)
    return mx, my, modulus
