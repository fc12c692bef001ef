"""Direct sampling of one generation from a family size distribution."""

import logging

import numpy as np

from strongties.errors import ZeroSupport
from strongties.math.sampling import cumulative, draw
from strongties.netgen.population import Person, Population, Sex, marry
from strongties.policy.dist import ChildCountDist

logger = logging.getLogger(__name__)


def nonempty_family_cdf(f: ChildCountDist) -> np.ndarray:
    """Return cumulative weights of F conditioned on at least one child.

    Index i of the result stands for a family of i + 1 children.
    """

    tail = f.array[1:]
    if tail.sum() <= 0.0:
        raise ZeroSupport("distribution has no families with children")

    return cumulative(tail)


def sample_population(f: ChildCountDist, alpha, target_n: int,
                      rng: np.random.Generator) -> Population:
    """Sample a generation of at least target_n persons.

    Families are drawn from F conditioned on having children until the
    generation reaches target_n persons; the last family is kept whole.
    The generation is then married at ratio alpha.
    """

    if target_n < 1:
        raise ValueError("target_n must be at least 1")

    cdf = nonempty_family_cdf(f)
    persons = []
    family = 0

    while len(persons) < target_n:
        size = draw(cdf, rng) + 1
        sexes = rng.integers(0, 2, size=size)
        start = len(persons)
        persons.extend(
            Person(start + i, Sex(int(s)), family, 0) for i, s in enumerate(sexes)
        )
        family += 1

    logger.info("sampled %d persons in %d families", len(persons), family)

    return Population(marry(persons, alpha, rng), generation_index=0)
