"""Connected components by union-find."""

from strongties.graph.network import StrongTiesNetwork


class UnionFind:
    """Disjoint sets with union by rank and path compression.

    The representative reported by `root` is the smallest member of each set,
    independent of the order of unions.
    """

    def __init__(self, items=()) -> None:
        self.parent = {x: x for x in items}
        self.rank = dict.fromkeys(self.parent, 0)
        self.smallest = {x: x for x in self.parent}

    def find(self, x):
        """Return internal representative of the set containing x."""

        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0
            self.smallest[x] = x

        root = x
        while self.parent[root] != root:
            root = self.parent[root]

        # path compression
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]

        return root

    def union(self, x, y) -> None:
        """Merge the sets containing x and y."""

        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return

        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        self.smallest[rx] = min(self.smallest[rx], self.smallest[ry])

    def root(self, x):
        """Return smallest member of the set containing x."""
        return self.smallest[self.find(x)]


def connected_components(net: StrongTiesNetwork) -> dict[int, int]:
    """Label each node with the smallest node id of its component."""

    uf = UnionFind(n.id for n in net.nodes)
    for e in net.edges:
        uf.union(e.u, e.v)

    return {n.id: uf.root(n.id) for n in net.nodes}


def component_sizes(labels: dict[int, int]) -> dict[int, int]:
    """Return component size per label."""

    sizes: dict[int, int] = {}
    for label in labels.values():
        sizes[label] = sizes.get(label, 0) + 1

    return sizes
