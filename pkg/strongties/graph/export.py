"""Network export to DOT, GraphML and edge-csv."""

import csv
import io
from abc import ABC, abstractmethod
from enum import Enum

import networkx as nx

from strongties.errors import UnknownFormat
from strongties.graph.network import (
    Edge,
    EdgeKind,
    Node,
    StrongTiesNetwork,
    make_network,
    to_networkx,
)

CSV_HEADER = ("u", "v", "kind")


class ExportFormat(str, Enum):
    """Network export formats enumerator."""

    DOT = "dot"
    GRAPHML = "graphml"
    EDGE_CSV = "edge-csv"

    @classmethod
    def parse(cls, name) -> "ExportFormat":
        """Return format by name."""

        try:
            return cls(name)
        except ValueError:
            raise UnknownFormat(f"unknown export format: {name!r}") from None

    @property
    def extension(self) -> str:
        """Return file name extension."""
        return {"dot": "dot", "graphml": "graphml", "edge-csv": "csv"}[self.value]


class Exporter(ABC):
    """Base class for network exporters."""

    @classmethod
    @abstractmethod
    def export(cls, net: StrongTiesNetwork) -> bytes:
        """Serialize network."""


class DotExporter(Exporter):
    """Undirected DOT graph with kind and color on every edge."""

    @classmethod
    def export(cls, net):
        dot = nx.nx_pydot.to_pydot(to_networkx(net))
        return dot.to_string().encode("utf-8")


class GraphMLExporter(Exporter):
    """GraphML with sex and family on nodes, kind and color on edges."""

    @classmethod
    def export(cls, net):
        lines = nx.generate_graphml(to_networkx(net))
        return ("\n".join(lines) + "\n").encode("utf-8")


class EdgeCsvExporter(Exporter):
    """Edge list with a u,v,kind header."""

    @classmethod
    def export(cls, net):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows((e.u, e.v, str(e.kind)) for e in net.edges)
        return buffer.getvalue().encode("utf-8")


# pylint: disable=too-few-public-methods


class ExporterFactory:
    """Factory of network exporters."""

    FACTORY = {
        ExportFormat.DOT: DotExporter,
        ExportFormat.GRAPHML: GraphMLExporter,
        ExportFormat.EDGE_CSV: EdgeCsvExporter,
    }

    @classmethod
    def get(cls, fmt) -> type[Exporter]:
        """Return exporter for a format."""
        return cls.FACTORY[ExportFormat.parse(fmt)]


# pylint: enable=too-few-public-methods


def export_network(net: StrongTiesNetwork, fmt="edge-csv") -> bytes:
    """Serialize network in the given format."""
    return ExporterFactory.get(fmt).export(net)


def read_edge_csv(data) -> StrongTiesNetwork:
    """Read a network back from edge-csv.

    Only nodes with at least one edge are recovered, without attributes.
    """

    text = data.decode("utf-8") if isinstance(data, bytes) else data
    rows = csv.reader(io.StringIO(text))

    if tuple(next(rows, ())) != CSV_HEADER:
        raise ValueError("edge-csv must start with a u,v,kind header")

    edges = [Edge(int(u), int(v), EdgeKind[kind.upper()]) for u, v, kind in rows]
    nodes = {x for e in edges for x in (e.u, e.v)}

    return make_network([Node(x) for x in nodes], edges)
