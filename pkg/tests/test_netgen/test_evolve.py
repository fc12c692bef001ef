"""Test strongties.netgen.evolve module."""

from collections import Counter

import numpy as np
import pytest
from scipy.stats import chisquare

from strongties.errors import PopulationDied
from strongties.math.sampling import stream
from strongties.netgen.evolve import evolve_generation, initial_population, run_policy_experiment
from strongties.netgen.population import Sex
from strongties.policy.builtin import builtin_policy
from strongties.policy.dist import validate_dist


def parents(seed=0, n=200, alpha=0.9):
    """Return 100 men and 100 women with 90 couples."""
    return initial_population(n, alpha, stream(seed))


def test_initial_population():
    """Even sex split, no siblings, alpha * 100 couples."""

    pop = parents()

    assert len(pop.men) == len(pop.women) == 100
    assert len(pop.couples) == 90
    assert pop.alpha_realized == pytest.approx(0.9)
    assert set(pop.family_sizes().values()) == {1}


def test_one_child_policy():
    """90 couples have 90 only children."""

    child = evolve_generation(parents(), builtin_policy("1C"), 0.9, stream(1))

    assert len(child) == 90
    assert set(child.family_sizes().values()) == {1}
    assert child.generation_index == 1


def test_two_children_policy():
    """90 couples have 180 children in families of two."""

    child = evolve_generation(parents(), builtin_policy("2C"), 0.9, stream(1))

    assert len(child) == 180
    assert Counter(child.family_sizes().values()) == {2: 90}


def test_zero_or_three_policy_mean():
    """About 60 families of three, about 180 children."""

    pop = parents()
    sizes = np.array([
        len(evolve_generation(pop, builtin_policy("0/3C"), 0.9, stream(seed)))
        for seed in range(1000)
    ])

    assert np.all(sizes % 3 == 0)
    assert abs(sizes.mean() - 180) <= 3 * sizes.std(ddof=1) / np.sqrt(len(sizes))


def test_zero_or_two_matches_one_child_in_size():
    """0/2C and 1C shrink the population alike."""

    pop = parents()
    sizes = np.array([
        len(evolve_generation(pop, builtin_policy("0/2C"), 0.9, stream(seed)))
        for seed in range(1000)
    ])

    assert abs(sizes.mean() - 90) <= 3 * sizes.std(ddof=1) / np.sqrt(len(sizes))


def test_children_map_to_parent_couples():
    """Every family belongs to one married couple and respects its quota."""

    pop = parents(3)
    child = evolve_generation(pop, builtin_policy("C++"), 0.9, stream(3))
    couples = set(pop.couples)
    sizes = child.family_sizes()

    assert len(child.families) == len(couples)
    for fam in child.families:
        assert (fam.husband_id, fam.wife_id) in couples
        assert sizes.get(fam.family_id, 0) == fam.quota
    assert {p.family_id for p in child.persons} <= {f.family_id for f in child.families}
    assert all(p.generation == 1 for p in child.persons)


def test_partial_utilization():
    """Families have at most their quota when children are not always born."""

    pop = parents(4)
    child = evolve_generation(pop, builtin_policy("0/3C"), 0.9, stream(4), utilization=0.5)
    sizes = child.family_sizes()

    assert all(sizes.get(f.family_id, 0) <= f.quota for f in child.families)
    assert len(child) < sum(f.quota for f in child.families)

    with pytest.raises(ValueError):
        evolve_generation(pop, builtin_policy("1C"), 0.9, stream(4), utilization=1.5)


def test_family_sizes_converge_to_policy():
    """Realized family sizes follow the policy and comply with it."""

    n = 20000
    pop = initial_population(n, 1.0, stream(6))
    policy = validate_dist((0.1, 0.2, 0.4, 0.3))
    child = evolve_generation(pop, policy, 1.0, stream(6))

    counts = np.bincount([f.quota for f in child.families], minlength=4)
    sizes = Counter(child.family_sizes().values())
    assert [sizes.get(i, 0) for i in range(1, 4)] == counts[1:].tolist()

    nonzero = counts[1:]
    expected = np.array(policy.weights[1:]) / (1 - policy.weights[0]) * nonzero.sum()
    assert chisquare(nonzero, expected).pvalue > 1e-3

    # prefix sums of realized sizes dominate the policy up to sampling noise
    realized = np.cumsum(counts / counts.sum())
    target = np.cumsum(policy.weights)
    noise = 4 * np.sqrt(target * (1 - target) / counts.sum())
    assert np.all(realized >= target - noise - 1e-12)


def test_empty_parents():
    """Without couples the next generation is empty."""

    pop = parents(alpha=0.0)
    child = evolve_generation(pop, builtin_policy("2C"), 0.9, stream(0))

    assert len(child) == 0
    assert child.families == ()


def test_run_one_child_fragments_into_pairs():
    """1C leaves no sibling edges and components of at most two."""

    for seed in range(100):
        (result,) = run_policy_experiment(200, builtin_policy("1C"), 0.9, 1, stream(seed))

        assert len(result.population) == 90
        assert result.metrics.sibling_edge_count == 0
        assert result.metrics.largest_component_size <= 2


def test_run_zero_or_two_keeps_siblings():
    """0/2C still produces sibling ties."""

    (result,) = run_policy_experiment(200, builtin_policy("0/2C"), 0.9, 1, stream(2))

    assert 50 <= len(result.population) <= 130
    assert result.metrics.sibling_edge_count > 0


def test_run_several_generations():
    """Generations are numbered and C++ keeps the population going."""

    results = run_policy_experiment(200, builtin_policy("C++"), 0.92, 3, stream(8))

    assert [r.population.generation_index for r in results] == [1, 2, 3]
    assert all(len(r.population) > 0 for r in results)
    assert all(p.sex in (Sex.MALE, Sex.FEMALE) for p in results[-1].population.persons)


def test_run_population_died():
    """No marriages, no next generation."""

    with pytest.raises(PopulationDied) as info:
        run_policy_experiment(200, builtin_policy("2C"), 0.0, 1, stream(0))

    assert info.value.partial == []
    assert info.value.generation == 1


def test_run_died_later_keeps_partial_results():
    """Results before the empty generation are kept."""

    with pytest.raises(PopulationDied) as info:
        run_policy_experiment(4, builtin_policy("1C"), 1.0, 5, stream(0))

    assert 1 <= len(info.value.partial) < 5


def test_run_is_deterministic():
    """Same seed, same generations."""

    a = run_policy_experiment(200, builtin_policy("0/3C"), 0.9, 2, stream(12))
    b = run_policy_experiment(200, builtin_policy("0/3C"), 0.9, 2, stream(12))

    assert [r.population for r in a] == [r.population for r in b]
    assert [r.network for r in a] == [r.network for r in b]
