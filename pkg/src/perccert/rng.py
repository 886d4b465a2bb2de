"""Bit-exact MT19937 (the 2002 update) with deterministic per-replicate seeding.

Every random decision in this package flows through this module.  A replicate
with seed ``base + i`` always produces the same stream on every platform, so a
(lattice, scale, p, seed) tuple pins a configuration exactly.

Conventions fixed here and relied on everywhere else:

* a uniform variate is a single 32-bit word ``u``; the associated real is
  ``u / 2**32`` (32-bit resolution);
* an element with open-probability ``p`` is open iff ``u < open_threshold(p)``
  where ``open_threshold(p) = ceil(p * 2**32)`` computed in exact integer
  arithmetic.  This is equivalent to ``u / 2**32 < p`` and never involves
  floating-point rounding when ``p`` is given as a decimal string or Fraction.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from numba import njit

_N = 624
_M = 397
_MATRIX_A = np.uint32(0x9908B0DF)
_UPPER = np.uint32(0x80000000)
_LOWER = np.uint32(0x7FFFFFFF)

TWO32 = 1 << 32


@njit(cache=True)
def mt_init(state, seed):
    """Initialise a 624-word state vector from a 32-bit seed (init_genrand, 2002)."""
    state[0] = np.uint32(seed)
    for i in range(1, _N):
        prev = state[i - 1]
        state[i] = np.uint32(np.uint32(1812433253) * (prev ^ (prev >> np.uint32(30))) + np.uint32(i))
    return _N


@njit(cache=True)
def mt_init_by_array(state, key):
    """Array seeding (init_by_array, 2002); used only for fixture cross-checks."""
    mt_init(state, 19650218)
    i = 1
    j = 0
    k = _N if _N > key.shape[0] else key.shape[0]
    while k > 0:
        state[i] = np.uint32(
            (state[i] ^ ((state[i - 1] ^ (state[i - 1] >> np.uint32(30))) * np.uint32(1664525)))
            + key[j]
            + np.uint32(j)
        )
        i += 1
        j += 1
        if i >= _N:
            state[0] = state[_N - 1]
            i = 1
        if j >= key.shape[0]:
            j = 0
        k -= 1
    k = _N - 1
    while k > 0:
        state[i] = np.uint32(
            (state[i] ^ ((state[i - 1] ^ (state[i - 1] >> np.uint32(30))) * np.uint32(1566083941)))
            - np.uint32(i)
        )
        i += 1
        if i >= _N:
            state[0] = state[_N - 1]
            i = 1
        k -= 1
    state[0] = np.uint32(0x80000000)
    return _N


@njit(cache=True)
def _twist(state):
    for kk in range(_N - _M):
        y = (state[kk] & _UPPER) | (state[kk + 1] & _LOWER)
        mag = _MATRIX_A if y & np.uint32(1) else np.uint32(0)
        state[kk] = state[kk + _M] ^ (y >> np.uint32(1)) ^ mag
    for kk in range(_N - _M, _N - 1):
        y = (state[kk] & _UPPER) | (state[kk + 1] & _LOWER)
        mag = _MATRIX_A if y & np.uint32(1) else np.uint32(0)
        state[kk] = state[kk + (_M - _N)] ^ (y >> np.uint32(1)) ^ mag
    y = (state[_N - 1] & _UPPER) | (state[0] & _LOWER)
    mag = _MATRIX_A if y & np.uint32(1) else np.uint32(0)
    state[_N - 1] = state[_M - 1] ^ (y >> np.uint32(1)) ^ mag


@njit(cache=True)
def mt_fill(state, index, out):
    """Write the next ``out.size`` words of the stream; returns the new cursor."""
    for pos in range(out.shape[0]):
        if index >= _N:
            _twist(state)
            index = 0
        y = state[index]
        index += 1
        y ^= y >> np.uint32(11)
        y ^= (y << np.uint32(7)) & np.uint32(0x9D2C5680)
        y ^= (y << np.uint32(15)) & np.uint32(0xEFC60000)
        y ^= y >> np.uint32(18)
        out[pos] = y
    return index


class Mt19937:
    """Single-owner generator state; many instances may run in parallel."""

    __slots__ = ("state", "index", "seed_value")

    def __init__(self, seed: int):
        if not 0 <= seed < TWO32:
            raise ValueError(f"seed must be an unsigned 32-bit integer, got {seed}")
        self.state = np.empty(_N, dtype=np.uint32)
        self.index = mt_init(self.state, seed)
        self.seed_value = seed

    @classmethod
    def from_key(cls, key) -> "Mt19937":
        gen = cls(0)
        gen.index = mt_init_by_array(gen.state, np.asarray(key, dtype=np.uint32))
        gen.seed_value = -1
        return gen

    def next_u32(self) -> int:
        out = np.empty(1, dtype=np.uint32)
        self.index = mt_fill(self.state, self.index, out)
        return int(out[0])

    def next_unit(self) -> float:
        return self.next_u32() / TWO32

    def fill(self, out: np.ndarray) -> None:
        if out.dtype != np.uint32:
            raise TypeError("fill() wants a uint32 array")
        self.index = mt_fill(self.state, self.index, out)

    def draw(self, n: int) -> np.ndarray:
        out = np.empty(n, dtype=np.uint32)
        self.fill(out)
        return out


def open_threshold(p) -> int:
    """Exact integer threshold T(p) = ceil(p * 2**32); element open iff u32 < T.

    Accepts a Fraction, a decimal string, or a float/int.  Floats go through
    Fraction(p) (the exact binary value), so the convention stays deterministic
    either way; decimal strings are the recommended input for published runs.
    """
    frac = p if isinstance(p, Fraction) else Fraction(str(p) if isinstance(p, str) else p)
    if not 0 <= frac <= 1:
        raise ValueError(f"probability out of range: {p!r}")
    num, den = frac.numerator, frac.denominator
    return -((-num * TWO32) // den)
