"""SplitMix64, the package's one source of randomness.

Chosen because it is tiny and trivially portable: a port in any language
that follows the three derivations below reproduces every generated
instance bit for bit.

* ``next_u64``: the reference SplitMix64 step (increment ``0x9E3779B97F4A7C15``,
  mixers ``0xBF58476D1CE4E5B9`` / ``0x94D049BB133111EB``, shifts 30/27/31).
* ``below(n)``: draw ``r``; reject while ``r >= 2**64 - (2**64 % n)``; return ``r % n``.
* ``chance(p)``: ``(next_u64() >> 11) < round(p * 2**53)``.
"""
from __future__ import annotations

from .errors import InvalidArgument

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise InvalidArgument("below() needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: float) -> bool:
        return (self.next_u64() >> 11) < round(p * (1 << 53))

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def sample(self, seq, r: int) -> list:
        """``r`` distinct items, partial Fisher-Yates over a copy of ``seq``."""
        pool = list(seq)
        for i in range(r):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:r]
