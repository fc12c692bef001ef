"""Monte Carlo simulation of Galton-Watson and strong-ties trees."""

import logging
from dataclasses import dataclass
from enum import IntEnum

import numpy as np
from joblib import Parallel, delayed

from strongties.branching.derived import DerivedChildDist, derive_child_dist
from strongties.math.sampling import stream
from strongties.policy.dist import ChildCountDist

logger = logging.getLogger(__name__)

CHUNKS = 64


@dataclass(frozen=True)
class Caps:
    """Limits standing in for an infinite tree."""

    max_levels: int = 500
    max_nodes: int = 10**6

    def __post_init__(self) -> None:
        if self.max_levels < 1 or self.max_nodes < 1:
            raise ValueError("caps must be at least 1")


@dataclass(frozen=True)
class BranchingOutcome:
    """One realized tree: node count per level and how the run ended."""

    z: tuple[int, ...]
    extinct: bool
    truncated: bool

    @property
    def total_nodes(self) -> int:
        """Return number of nodes over all recorded levels."""
        return sum(self.z)

    @property
    def survived(self) -> bool:
        """Check if the run hit a cap while still alive."""
        return self.truncated


class TreeKind(IntEnum):
    """Branching trees enumerator."""

    GALTON_WATSON = 0
    STRONG_TIES = 1


def _grow(dist: DerivedChildDist, rng, caps: Caps, z1: int) -> BranchingOutcome:
    """Grow a tree level by level, given the size of level one."""

    values = np.arange(len(dist.a))
    p = dist.array
    z = [1, z1]
    total = 1 + z1

    while True:
        if z[-1] == 0:
            return BranchingOutcome(tuple(z), extinct=True, truncated=False)
        if len(z) > caps.max_levels or total > caps.max_nodes:
            return BranchingOutcome(tuple(z), extinct=False, truncated=True)

        # offspring of the whole level as counts per offspring value
        nxt = int(rng.multinomial(z[-1], p) @ values)
        z.append(nxt)
        total += nxt


def simulate_gw(dist: DerivedChildDist, rng, max_levels: int = 500,
                max_nodes: int = 10**6) -> BranchingOutcome:
    """Simulate a Galton-Watson tree with offspring distribution `dist`."""

    caps = Caps(max_levels, max_nodes)
    z1 = int(rng.multinomial(1, dist.array) @ np.arange(len(dist.a)))

    return _grow(dist, rng, caps, z1)


def simulate_strong_ties_tree(f: ChildCountDist, alpha, rng, max_levels: int = 500,
                              max_nodes: int = 10**6) -> BranchingOutcome:
    """Simulate a strong-ties tree grown from a root couple.

    Both spouses of the root couple bring in married siblings, so the root
    draws its offspring twice; every other couple draws once.
    """

    dist = derive_child_dist(f, alpha)
    return _simulate_root_twice(dist, rng, Caps(max_levels, max_nodes))


def _simulate_root_twice(dist: DerivedChildDist, rng, caps: Caps) -> BranchingOutcome:

    z1 = int(rng.multinomial(2, dist.array) @ np.arange(len(dist.a)))
    return _grow(dist, rng, caps, z1)


def _run_chunk(kind: TreeKind, dist: DerivedChildDist, caps: Caps, seed: int, indices):

    simulate = _simulate_root_twice if kind == TreeKind.STRONG_TIES else _simulate_once

    return [simulate(dist, stream(seed, int(i)), caps) for i in indices]


def _simulate_once(dist: DerivedChildDist, rng, caps: Caps) -> BranchingOutcome:
    return simulate_gw(dist, rng, caps.max_levels, caps.max_nodes)


def simulate_many(kind: TreeKind, dist: DerivedChildDist, runs: int, seed: int,
                  caps: Caps = Caps(), n_jobs: int = 1) -> list[BranchingOutcome]:
    """Simulate `runs` independent trees.

    Run i uses random stream i of `seed`, so the result does not depend on
    n_jobs.
    """

    if runs < 1:
        raise ValueError("runs must be at least 1")

    chunks = np.array_split(np.arange(runs), min(runs, CHUNKS))
    logger.info("simulating %d %s trees, n_jobs=%d", runs, kind.name, n_jobs)

    if n_jobs == 1:
        parts = [_run_chunk(kind, dist, caps, seed, c) for c in chunks]
    else:
        parts = Parallel(n_jobs=n_jobs)(
            delayed(_run_chunk)(kind, dist, caps, seed, c) for c in chunks
        )

    return [outcome for part in parts for outcome in part]


def survival_frequency(f: ChildCountDist, alpha, runs: int, caps: Caps = Caps(),
                       seed: int = 0, n_jobs: int = 1) -> float:
    """Return fraction of strong-ties trees that hit a cap without dying out."""

    dist = derive_child_dist(f, alpha)
    outcomes = simulate_many(TreeKind.STRONG_TIES, dist, runs, seed, caps, n_jobs)

    return sum(o.survived for o in outcomes) / runs


def level_means(outcomes: list[BranchingOutcome], levels: int) -> list[float]:
    """Return mean Z_t for t = 0..levels-1.

    Extinct runs count as zero past their extinction; runs stopped by a cap
    before level t are left out of the level-t mean.
    """

    means = []
    for t in range(levels):
        values = [
            o.z[t] if t < len(o.z) else 0
            for o in outcomes
            if t < len(o.z) or o.extinct
        ]
        if not values:
            break
        means.append(float(np.mean(values)))

    return means
