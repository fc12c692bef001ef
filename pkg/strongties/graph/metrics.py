"""Fragmentation metrics of a strong-ties network."""

from collections import Counter
from dataclasses import asdict, dataclass, field

from strongties.graph.components import component_sizes, connected_components
from strongties.graph.network import EdgeKind, StrongTiesNetwork


@dataclass(frozen=True)
class Metrics:
    """Connectivity summary of one network."""

    node_count: int
    sibling_edge_count: int
    marital_edge_count: int
    component_count: int
    largest_component_size: int
    largest_component_fraction: float
    singleton_count: int
    component_size_histogram: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        """Return metrics as a plain dictionary with string histogram keys."""

        d = asdict(self)
        d["component_size_histogram"] = {
            str(k): v for k, v in sorted(self.component_size_histogram.items())
        }
        return d


def compute_metrics(net: StrongTiesNetwork) -> Metrics:
    """Compute connectivity metrics of a network."""

    sizes = list(component_sizes(connected_components(net)).values())
    histogram = Counter(sizes)
    largest = max(sizes, default=0)

    return Metrics(
        node_count=net.node_count,
        sibling_edge_count=len(net.edges_of(EdgeKind.SIBLING)),
        marital_edge_count=len(net.edges_of(EdgeKind.MARITAL)),
        component_count=len(sizes),
        largest_component_size=largest,
        largest_component_fraction=largest / net.node_count if net.node_count else 0.0,
        singleton_count=histogram.get(1, 0),
        component_size_histogram=dict(sorted(histogram.items())),
    )
