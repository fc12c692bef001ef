"""Random populations and networks shared by graph tests."""

from collections import deque

from strongties.graph.network import Edge, EdgeKind, Node, make_network
from strongties.netgen.population import Person, Population, Sex, marry


def random_population(rng, families, max_size=3, alpha=0.8) -> Population:
    """Return a married population of random families of 1..max_size children."""

    persons = []
    for fam in range(families):
        for _ in range(int(rng.integers(1, max_size + 1))):
            persons.append(Person(len(persons), Sex(int(rng.integers(0, 2))), fam, 0))

    return Population(marry(persons, alpha, rng))


def random_network(rng, max_nodes=50):
    """Return a random network with sibling cliques, marriages and isolated nodes."""

    n = int(rng.integers(1, max_nodes + 1))
    ids = rng.permutation(1000)[:n].tolist()
    family = rng.integers(0, max(1, n // 2), size=n)
    nodes = [Node(i, Sex(int(rng.integers(0, 2))), int(f)) for i, f in zip(ids, family)]

    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if family[a] == family[b]:
                edges.append(Edge(ids[a], ids[b], EdgeKind.SIBLING))

    free = rng.permutation(n).tolist()
    while len(free) >= 2 and rng.random() < 0.7:
        a, b = free.pop(), free.pop()
        if family[a] != family[b]:
            edges.append(Edge(ids[a], ids[b], EdgeKind.MARITAL))

    return make_network(nodes, edges)


def bfs_labels(net) -> dict[int, int]:
    """Label nodes with the smallest id reachable by breadth-first search."""

    adjacency = {n.id: [] for n in net.nodes}
    for e in net.edges:
        adjacency[e.u].append(e.v)
        adjacency[e.v].append(e.u)

    labels = {}
    for start in sorted(adjacency):
        if start in labels:
            continue
        seen, queue = {start}, deque([start])
        while queue:
            for nxt in adjacency[queue.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        for x in seen:
            labels[x] = min(seen)

    return labels
