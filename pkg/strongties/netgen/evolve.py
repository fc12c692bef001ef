"""Generational evolution of a population under a policy."""

import logging
from dataclasses import dataclass

import numpy as np

from strongties.errors import PopulationDied
from strongties.graph.metrics import Metrics, compute_metrics
from strongties.graph.network import StrongTiesNetwork, build_network
from strongties.netgen.population import Family, Person, Population, Sex, marry
from strongties.policy.dist import ChildCountDist, sample_quota

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenerationResult:
    """Population of one generation with its network and metrics."""

    population: Population
    network: StrongTiesNetwork
    metrics: Metrics


def initial_population(n: int, alpha, rng: np.random.Generator) -> Population:
    """Return a married generation of n unrelated persons, half of them men."""

    if n < 2:
        raise ValueError("initial population needs at least 2 persons")

    persons = [
        Person(i, Sex.MALE if i < n // 2 else Sex.FEMALE, family_id=i, generation=0)
        for i in range(n)
    ]
    return Population(marry(persons, alpha, rng), generation_index=0)


def evolve_generation(parents: Population, policy: ChildCountDist, alpha_next,
                      rng: np.random.Generator, utilization: float = 1.0) -> Population:
    """Produce the next generation.

    Each married couple draws a quota K from the policy and has K children,
    or Binomial(K, utilization) children when utilization < 1. Unmarried
    persons have no children. The children are married at ratio alpha_next.
    """

    if not 0.0 <= utilization <= 1.0:
        raise ValueError(f"utilization must lie in [0, 1], got {utilization}")

    generation = parents.generation_index + 1
    next_id = max((p.id for p in parents.persons), default=-1) + 1
    next_family = max((p.family_id for p in parents.persons), default=-1) + 1

    children = []
    families = []

    for husband, wife in parents.couples:
        quota = sample_quota(policy, rng)
        k = quota if utilization == 1.0 else int(rng.binomial(quota, utilization))

        for s in rng.integers(0, 2, size=k):
            children.append(Person(next_id, Sex(int(s)), next_family, generation))
            next_id += 1

        families.append(Family(next_family, husband, wife, quota))
        next_family += 1

    logger.info(
        "generation %d: %d couples produced %d children",
        generation, len(families), len(children),
    )

    return Population(marry(children, alpha_next, rng), generation, tuple(families))


def run_policy_experiment(initial_n: int, policy: ChildCountDist, alpha, generations: int,
                          rng: np.random.Generator,
                          utilization: float = 1.0) -> list[GenerationResult]:
    """Evolve a population for a number of generations under a policy.

    Returns network and metrics of every generation after the initial one.
    Raises PopulationDied, carrying the results so far, when a generation
    comes out empty.
    """

    if generations < 1:
        raise ValueError("generations must be at least 1")

    population = initial_population(initial_n, alpha, rng)
    results = []

    for _ in range(generations):
        population = evolve_generation(population, policy, alpha, rng, utilization)

        if len(population) == 0:
            raise PopulationDied(population.generation_index, results)

        network = build_network(population)
        results.append(GenerationResult(population, network, compute_metrics(network)))

    return results
