"""
Counter-seeded xorshift64* streams, vectorized over walks.

Constants (all arithmetic mod 2^64):

    splitmix64:  z += 0x9E3779B97F4A7C15
                 z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
                 z = (z ^ (z >> 27)) * 0x94D049BB133111EB
                 z ^= z >> 31
    xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27
                 output = x * 0x2545F4914F6CDD1D

Walk ``i`` (0-based) of a run with seed ``s`` starts from
splitmix64(s + i * golden), where golden is the splitmix increment, so a
walk's random numbers depend only on (s, i). A zero state is replaced by the
golden constant because xorshift never leaves zero.

Neighbor choices are drawn by rejection over the full 64-bit output, so any
row whose probabilities share a denominator below 2^64 is sampled exactly.
"""

import numpy as np

MASK64 = (1 << 64) - 1
WEIGHT_LIMIT = 1 << 64  # common denominators must stay below this
GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
STAR = np.uint64(0x2545F4914F6CDD1D)

_S12 = np.uint64(12)
_S25 = np.uint64(25)
_S27 = np.uint64(27)
_S30 = np.uint64(30)
_S31 = np.uint64(31)


def splitmix64(z: np.ndarray) -> np.ndarray:
    """One splitmix64 output per element of a uint64 array."""
    z = z + GOLDEN
    z = (z ^ (z >> _S30)) * MIX1
    z = (z ^ (z >> _S27)) * MIX2
    return z ^ (z >> _S31)


def substream_states(seed: int, start: int, stop: int) -> np.ndarray:
    """Initial xorshift states for walks ``start..stop-1``."""
    index = np.arange(start, stop, dtype=np.uint64)
    base = np.uint64(seed & MASK64)
    states = splitmix64(base + index * GOLDEN)
    states[states == 0] = GOLDEN
    return states


def xorshift64star(states: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Advance every state once; returns ``(new states, outputs)``."""
    x = states ^ (states >> _S12)
    x = x ^ (x << _S25)
    x = x ^ (x >> _S27)
    return x, x * STAR


def uniform_below(states: np.ndarray, bounds: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Advance each stream until it yields an unbiased integer in ``0..bounds-1``.

    An output ``x`` is kept when ``x >= 2^64 mod bound`` and reduced modulo
    the bound; the kept range is a whole multiple of the bound. Rejected
    streams draw again, so each walk consumes one or more outputs per step.
    Bounds must be at least 1 and fit in 64 bits.

    Returns ``(new states, draws)``.
    """
    states = states.copy()
    draws = np.empty(states.size, dtype=np.uint64)
    # 2^64 mod b, computed as (2^64 - b) mod b in wrapping uint64 arithmetic
    floor = (np.uint64(0) - bounds) % bounds
    pending = np.arange(states.size)
    while pending.size:
        states[pending], outputs = xorshift64star(states[pending])
        kept = outputs >= floor[pending]
        draws[pending[kept]] = outputs[kept] % bounds[pending][kept]
        pending = pending[~kept]
    return states, draws
