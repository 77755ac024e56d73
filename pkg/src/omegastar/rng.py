"""SplitMix64: the pinned pseudorandom generator for all sampling.

Contract (stable across platforms and versions): a stream seeded with the
64-bit integer `seed` produces outputs

    out_i = mix64((seed + i * GAMMA) mod 2**64),  i = 1, 2, ...

where GAMMA = 0x9E3779B97F4A7C15 and mix64 is the murmur-style finalizer
below.  Unit floats are (out >> 11) * 2**-53.  Substream j of a seed is
itself SplitMix64-seeded with mix64(seed + j * GAMMA), so disjoint index
ranges give reproducible, order-independent parallel sampling.

Scalar (pure int) and vectorized (numpy uint64) paths are bit-identical.
"""

from __future__ import annotations

import numpy as np

GAMMA = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_U53 = 2.0**-53


def mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * _M1) & _MASK
    z = ((z ^ (z >> 27)) * _M2) & _MASK
    return z ^ (z >> 31)


def _mix64_vec(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


def stream(seed: int, n: int) -> np.ndarray:
    """First n raw 64-bit outputs of the stream for `seed`."""
    idx = np.arange(1, n + 1, dtype=np.uint64)
    return _mix64_vec(np.uint64(seed & _MASK) + idx * np.uint64(GAMMA))


def to_unit(raw: np.ndarray) -> np.ndarray:
    """Map raw 64-bit outputs to floats in [0, 1)."""
    return (raw >> np.uint64(11)).astype(np.float64) * _U53


def unit_stream(seed: int, n: int) -> np.ndarray:
    return to_unit(stream(seed, n))


def substream_seed(seed: int, j: int) -> int:
    """Seed of substream j; substreams of one seed never share raw states for
    the index ranges used here."""
    return mix64((seed + j * GAMMA) & _MASK)


def substream_seeds(seed: int, start: int, count: int) -> np.ndarray:
    """Vector of substream seeds for indices start .. start+count-1."""
    idx = np.arange(start, start + count, dtype=np.uint64)
    return _mix64_vec(np.uint64(seed & _MASK) + idx * np.uint64(GAMMA))


def unit_block(seeds: np.ndarray, n: int) -> np.ndarray:
    """Matrix of unit floats: row i holds the first n draws of seeds[i].

    Row i is bit-identical to unit_stream(int(seeds[i]), n).
    """
    offs = np.arange(1, n + 1, dtype=np.uint64) * np.uint64(GAMMA)
    return to_unit(_mix64_vec(seeds[:, None] + offs[None, :]))
