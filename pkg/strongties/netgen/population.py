"""Persons, populations and marriage within a generation."""

import logging
from dataclasses import dataclass, replace
from enum import IntEnum

import numpy as np

from strongties.policy.dist import as_ratio

logger = logging.getLogger(__name__)

MATCH_ATTEMPTS = 100


class Sex(IntEnum):
    """Sex enumerator."""

    MALE = 0
    FEMALE = 1

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class Person:
    """Member of one generation.

    family_id identifies the parents' family, so persons sharing it are
    siblings.
    """

    id: int
    sex: Sex
    family_id: int
    generation: int
    spouse_id: int | None = None

    @property
    def married(self) -> bool:
        """Check if person has a spouse."""
        return self.spouse_id is not None


@dataclass(frozen=True)
class Family:
    """Couple of the previous generation and the quota it drew."""

    family_id: int
    husband_id: int
    wife_id: int
    quota: int


@dataclass(frozen=True)
class Population:
    """One generation of persons, ordered by id.

    families lists the parent couples of an evolved generation, including
    those without children; it is empty for sampled generations.
    """

    persons: tuple[Person, ...]
    generation_index: int = 0
    families: tuple[Family, ...] = ()

    def __len__(self) -> int:
        return len(self.persons)

    @property
    def men(self) -> list[Person]:
        """Return all men."""
        return [p for p in self.persons if p.sex == Sex.MALE]

    @property
    def women(self) -> list[Person]:
        """Return all women."""
        return [p for p in self.persons if p.sex == Sex.FEMALE]

    @property
    def couples(self) -> list[tuple[int, int]]:
        """Return married couples as (husband id, wife id), ordered by wife id."""
        return [(p.spouse_id, p.id) for p in self.women if p.married]

    @property
    def alpha_realized(self) -> float:
        """Return married women divided by all women (0 without women)."""

        women = self.women
        if not women:
            return 0.0

        return sum(p.married for p in women) / len(women)

    def family_sizes(self) -> dict[int, int]:
        """Return number of persons per family id."""

        sizes: dict[int, int] = {}
        for p in self.persons:
            sizes[p.family_id] = sizes.get(p.family_id, 0) + 1

        return sizes


def marriage_count(alpha, men: int, women: int) -> int:
    """Return number of couples formed: alpha * min(men, women), half to even."""
    return int(np.rint(as_ratio(alpha).alpha * min(men, women)))


def _match(husbands: list[int], wives: list[int], family: dict[int, int],
           rng: np.random.Generator) -> list[tuple[int, int]]:
    """Pair husbands with wives uniformly at random, never pairing siblings."""

    for _ in range(MATCH_ATTEMPTS):
        order = rng.permutation(len(wives))
        pairs = [(h, wives[i]) for h, i in zip(husbands, order.tolist())]
        if all(family[h] != family[w] for h, w in pairs):
            return pairs

    # repair the last draw by swapping wives between pairs
    for i, (h, w) in enumerate(pairs):
        if family[h] != family[w]:
            continue
        for j, (h2, w2) in enumerate(pairs):
            if family[h] != family[w2] and family[h2] != family[w]:
                pairs[i], pairs[j] = (h, w2), (h2, w)
                break

    valid = [(h, w) for h, w in pairs if family[h] != family[w]]
    if len(valid) < len(pairs):
        logger.warning("left %d sibling pairs unmarried", len(pairs) - len(valid))

    return valid


def marry(persons, alpha, rng: np.random.Generator) -> tuple[Person, ...]:
    """Marry unmarried men and women by a uniform random matching.

    round(alpha * min(men, women)) men and as many women are picked at
    random and paired; siblings are never paired. Returns the persons,
    ordered by id, with spouse links set.
    """

    persons = sorted(persons, key=lambda p: p.id)
    men = [p.id for p in persons if p.sex == Sex.MALE and not p.married]
    women = [p.id for p in persons if p.sex == Sex.FEMALE and not p.married]
    m = marriage_count(alpha, len(men), len(women))

    if m == 0:
        return tuple(persons)

    husbands = rng.choice(men, size=m, replace=False).tolist()
    wives = rng.choice(women, size=m, replace=False).tolist()
    family = {p.id: p.family_id for p in persons}

    spouse = {}
    for h, w in _match(husbands, wives, family, rng):
        spouse[h] = w
        spouse[w] = h

    logger.debug("married %d couples among %d men and %d women", m, len(men), len(women))

    return tuple(
        replace(p, spouse_id=spouse[p.id]) if p.id in spouse else p for p in persons
    )
