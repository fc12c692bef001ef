"""Strong-ties network of one generation."""

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations

import networkx as nx

from strongties.netgen.population import Population, Sex


class EdgeKind(IntEnum):
    """Strong tie kinds enumerator."""

    SIBLING = 0
    MARITAL = 1

    def __str__(self) -> str:
        return self.name.lower()

    @property
    def color(self) -> str:
        """Return drawing color of the tie."""
        return EDGE_COLORS[self]


EDGE_COLORS = {
    EdgeKind.SIBLING: "blue",
    EdgeKind.MARITAL: "red",
}


@dataclass(frozen=True)
class Node:
    """Person as a network node. Attributes are unknown for imported networks."""

    id: int
    sex: Sex | None = None
    family_id: int | None = None


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected tie stored with u < v."""

    u: int
    v: int
    kind: EdgeKind


@dataclass(frozen=True)
class StrongTiesNetwork:
    """Sibling and marital ties between the persons of one generation."""

    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]

    @property
    def node_count(self) -> int:
        """Return number of nodes."""
        return len(self.nodes)

    def edges_of(self, kind: EdgeKind) -> list[Edge]:
        """Return all edges of a kind."""
        return [e for e in self.edges if e.kind == kind]


def make_network(nodes, edges) -> StrongTiesNetwork:
    """Return a network with nodes sorted by id and edges normalized and sorted."""

    normalized = {Edge(min(e.u, e.v), max(e.u, e.v), EdgeKind(e.kind)) for e in edges}
    if any(e.u == e.v for e in normalized):
        raise ValueError("self-loops are not strong ties")

    return StrongTiesNetwork(
        tuple(sorted(nodes, key=lambda n: n.id)),
        tuple(sorted(normalized)),
    )


def build_network(pop: Population) -> StrongTiesNetwork:
    """Build the strong-ties network of a population.

    Siblings form a clique per family; each married couple adds one marital
    edge.
    """

    nodes = [Node(p.id, p.sex, p.family_id) for p in pop.persons]

    families: dict[int, list[int]] = {}
    for p in pop.persons:
        families.setdefault(p.family_id, []).append(p.id)

    edges = [
        Edge(u, v, EdgeKind.SIBLING)
        for members in families.values()
        for u, v in combinations(sorted(members), 2)
    ]
    edges.extend(
        Edge(p.id, p.spouse_id, EdgeKind.MARITAL)
        for p in pop.persons
        if p.married and p.id < p.spouse_id
    )

    return make_network(nodes, edges)


def star_transform(net: StrongTiesNetwork) -> StrongTiesNetwork:
    """Replace each sibling clique by a star centred on its smallest member."""

    neighbours: dict[int, set[int]] = {}
    for e in net.edges_of(EdgeKind.SIBLING):
        neighbours.setdefault(e.u, set()).add(e.v)
        neighbours.setdefault(e.v, set()).add(e.u)

    edges = list(net.edges_of(EdgeKind.MARITAL))
    for node, others in neighbours.items():
        clique = others | {node}
        if node == min(clique):
            edges.extend(Edge(node, v, EdgeKind.SIBLING) for v in sorted(others))

    return make_network(net.nodes, edges)


def to_networkx(net: StrongTiesNetwork) -> nx.Graph:
    """Return an attribute-carrying networkx graph.

    Nodes carry sex and family, edges carry kind and color; unknown
    attributes are left out.
    """

    graph = nx.Graph()
    for n in net.nodes:
        attrs = {}
        if n.sex is not None:
            attrs["sex"] = str(n.sex)
        if n.family_id is not None:
            attrs["family"] = n.family_id
        graph.add_node(n.id, **attrs)

    for e in net.edges:
        graph.add_edge(e.u, e.v, kind=str(e.kind), color=e.kind.color)

    return graph
