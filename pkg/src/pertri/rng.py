"""Small deterministic generator used by the fuzz harnesses.

SplitMix64 (Steele, Lea & Flood) is simple enough to re-implement in any
language, so a failing fuzz case can be replayed elsewhere from its seed:

    state  <- state + 0x9E3779B97F4A7C15              (mod 2**64)
    z      <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    output <- z ^ (z >> 31)

Floats in [0, 1) take the top 53 bits: ``(output >> 11) * 2**-53``.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = int(seed) & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range [lo, hi]."""
        span = hi - lo + 1
        return lo + self.next_u64() % span

    def sign(self) -> int:
        return 1 if self.next_u64() >> 63 else -1

    def complex(self, radius: float = 2.0) -> complex:
        return complex(self.uniform(-radius, radius), self.uniform(-radius, radius))
