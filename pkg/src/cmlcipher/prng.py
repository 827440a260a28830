"""Small deterministic 64-bit generator for reproducible sampling.

SplitMix64: one 64-bit state, one output per step, trivially portable.
Golden report files and generated keys depend on these streams staying
stable forever, which is why this is hand-rolled rather than delegated to
a library generator whose stream may change between releases.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic generator; same seed, same stream, on every platform."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound).

        Plain modulo reduction; the bias is < bound / 2^64, irrelevant for
        the sampling workloads here (bounds are < 2^31).
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def next_in_range(self, lo: float, hi: float) -> float:
        """Uniform double in [lo, hi)."""
        return lo + (hi - lo) * self.next_float()
