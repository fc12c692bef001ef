"""Test strongties.graph.components module."""

from itertools import combinations

import numpy as np

from strongties.graph.components import UnionFind, component_sizes, connected_components
from strongties.graph.network import Edge, EdgeKind, Node, build_network, make_network
from strongties.netgen.population import Person, Population, Sex

from tests.test_graph.helpers import bfs_labels, random_network


def test_empty_network():
    """No nodes, no components."""

    net = make_network([], [])

    assert connected_components(net) == {}
    assert component_sizes({}) == {}


def test_union_find():
    """Roots are smallest members whatever the union order."""

    uf = UnionFind(range(6))
    uf.union(5, 4)
    uf.union(4, 3)
    uf.union(1, 2)

    assert [uf.root(x) for x in range(6)] == [0, 1, 1, 3, 3, 3]

    uf.union(5, 2)

    assert [uf.root(x) for x in range(6)] == [0, 1, 1, 1, 1, 1]
    assert uf.find(3) == uf.find(2)


def test_union_find_adds_unknown_items():
    """Unseen items form singleton sets."""

    uf = UnionFind()
    uf.union(7, 3)

    assert uf.root(7) == 3
    assert uf.root(11) == 11


def test_matches_breadth_first_search():
    """Union-find labels equal BFS labels on random networks."""

    rng = np.random.default_rng(0)
    for _ in range(1000):
        net = random_network(rng)

        assert connected_components(net) == bfs_labels(net)


def test_all_small_graphs():
    """Every graph on four nodes."""

    pairs = list(combinations(range(4), 2))
    nodes = [Node(i) for i in range(4)]
    for mask in range(2 ** len(pairs)):
        edges = [Edge(u, v, EdgeKind.SIBLING) for k, (u, v) in enumerate(pairs) if mask >> k & 1]
        net = make_network(nodes, edges)

        assert connected_components(net) == bfs_labels(net)


def test_couples_and_singletons():
    """40 couples of only children and 10 unmarried only children."""

    persons = []
    for i in range(40):
        persons.append(Person(2 * i, Sex.MALE, 2 * i, 0, spouse_id=2 * i + 1))
        persons.append(Person(2 * i + 1, Sex.FEMALE, 2 * i + 1, 0, spouse_id=2 * i))
    persons.extend(Person(80 + i, Sex.FEMALE, 80 + i, 0) for i in range(10))

    labels = connected_components(build_network(Population(tuple(persons))))
    sizes = component_sizes(labels)

    assert len(sizes) == 50
    assert sorted(sizes.values()) == [1] * 10 + [2] * 40
    assert labels[1] == 0
    assert labels[81] == 81
