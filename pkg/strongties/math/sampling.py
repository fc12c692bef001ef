"""Seeded random streams and inverse-CDF sampling."""

import numpy as np


def new_seed() -> int:
    """Return a fresh 64-bit seed drawn from OS entropy."""
    return int(np.random.SeedSequence().generate_state(1, np.uint64)[0])


def stream(seed: int, index: int = 0) -> np.random.Generator:
    """Return the random generator of run `index` under `seed`.

    Streams of distinct indices are independent, and stream(seed, i) does not
    depend on how many other streams exist, so runs can be split freely
    across workers.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def cumulative(weights) -> np.ndarray:
    """Return cumulative weights normalized to end exactly at one."""

    cdf = np.cumsum(np.asarray(weights, dtype=float))
    return cdf / cdf[-1]


def draw(cdf: np.ndarray, rng: np.random.Generator, size=None):
    """Draw indices from a cumulative distribution by inversion.

    Returns a python int when size is None, an integer array otherwise.
    """

    u = rng.random(size)
    idx = np.searchsorted(cdf, u, side="right")

    if size is None:
        return int(idx)

    return idx.astype(np.int64)
