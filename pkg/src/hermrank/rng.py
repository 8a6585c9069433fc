"""Deterministic 64-bit random number generation (SplitMix64).

Every randomized procedure in this package draws from SplitMix64 streams so
that results are reproducible bit-for-bit across platforms and Python
versions.  The generator is the standard one: the state advances by the
golden-ratio increment 0x9E3779B97F4A7C15 and each output is the finalizer

    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27; z *= 0x94D049BB133111EB
    z ^= z >> 31

applied to the new state, all modulo 2^64.  Independent substreams are
derived by :func:`substream_seed`, which runs the same finalizer on
``master + GOLDEN * (index + 1)``; distinct indices give uncorrelated seeds.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def substream_seed(master: int, index: int) -> int:
    """Seed for the index-th substream of a master seed."""
    return _mix((master + GOLDEN * (index + 1)) & _MASK)


class SplitMix64:
    """SplitMix64 stream; deterministic for a given seed."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & _MASK
        return _mix(self._state)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound) by reduction; bound must be positive.

        Plain modular reduction is used on purpose: the bias for the tiny
        bounds needed here (q, q^2, small table sizes) is far below 2^-50 and
        the reduction keeps the consumed-stream layout trivially portable.
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound
