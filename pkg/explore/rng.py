# explore/rng.py
"""Portable seeded generator for reproducible experiments.

xoshiro256** with its 256-bit state filled by four SplitMix64 outputs of the seed.
Both algorithms are fixed so that a seed names the same random classes in any
implementation. Trial ``i`` of a run seeded with ``s`` draws from
``SeededRNG.stream(s, i)``, whose seed is ``s`` XORed with the SplitMix64 output
of ``i``; streams therefore do not depend on how trials are scheduled.
"""
from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state):
    """Advance a SplitMix64 state; returns ``(next_state, output)``."""
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def _rotl(value, shift):
    return ((value << shift) | (value >> (64 - shift))) & MASK64


class SeededRNG:
    """xoshiro256** generator seeded through SplitMix64."""

    def __init__(self, seed: int):
        self._seed = seed
        state = seed & MASK64
        words = []
        for _ in range(4):
            state, output = splitmix64(state)
            words.append(output)
        self._state = words

    @classmethod
    def stream(cls, seed: int, index: int) -> SeededRNG:
        _, salt = splitmix64(index & MASK64)
        return cls((seed & MASK64) ^ salt)

    @property
    def seed(self) -> int:
        return self._seed

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._state
        result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._state = [s0, s1, s2, s3]
        return result

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection, so no modulo bias."""
        if not 0 < n <= 1 << 64:
            raise ValueError(f"randbelow needs 0 < n <= 2^64, got {n}")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            value = self.next_u64()
            if value < limit:
                return value % n

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def choice(self, seq):
        return seq[self.randbelow(len(seq))]

    def sample_distinct(self, k: int, population: int) -> list[int]:
        """``k`` distinct values of range(population), uniformly (Floyd's algorithm), sorted."""
        if not 0 <= k <= population:
            raise ValueError(f"cannot draw {k} distinct values from {population}")
        chosen = set()
        for j in range(population - k, population):
            t = self.randbelow(j + 1)
            chosen.add(j if t in chosen else t)
        return sorted(chosen)

    def fork(self) -> SeededRNG:
        """Child generator seeded from this one, for sub-tasks."""
        return SeededRNG(self.next_u64())
