"""
GML reader for the node/edge/id/label/source/target subset.

Parsing is delegated to networkx; the reader forces multigraph parsing so
repeated edges collapse instead of failing, and treats directed input as
undirected.
"""

import logging
import re
from collections.abc import Sequence
from typing import ClassVar

import networkx as nx

from community_veil.exceptions import GraphFormatError
from community_veil.graph import Graph
from community_veil.models import GraphFormat
from community_veil.readers.base import BaseReader

logger = logging.getLogger(__name__)


class GMLReader(BaseReader):
    """Reader for GML graph files."""

    supported_extensions: ClassVar[list[str]] = ["gml"]
    graph_format: ClassVar[GraphFormat] = GraphFormat.GML

    GRAPH_BLOCK_PATTERN = re.compile(r"\bgraph\s*\[")
    MULTIGRAPH_PATTERN = re.compile(r"\bmultigraph\s+\d+")

    def parse(self, text: str, known_labels: Sequence[str] = ()) -> Graph:
        match = self.GRAPH_BLOCK_PATTERN.search(text)
        if match is None:
            raise GraphFormatError("missing 'graph [ ... ]' block")

        if self.MULTIGRAPH_PATTERN.search(text):
            text = self.MULTIGRAPH_PATTERN.sub("multigraph 1", text)
        else:
            text = f"{text[: match.end()]} multigraph 1 {text[match.end() :]}"

        try:
            parsed = nx.parse_gml(text, label="id")
        except (nx.NetworkXError, ValueError) as e:
            raise GraphFormatError(f"invalid GML: {e}") from e

        order: dict[str, int] = {}
        for label in known_labels:
            order.setdefault(str(label), len(order))

        id_to_label: dict[object, str] = {}
        used: set[str] = set()
        for node_id, data in parsed.nodes(data=True):
            label = str(data.get("label", node_id))
            if label in used:
                raise GraphFormatError(f"duplicate node label {label!r}", node=str(node_id))
            id_to_label[node_id] = label
            used.add(label)
            order.setdefault(label, len(order))

        edges: set[tuple[int, int]] = set()
        for source, target in parsed.edges():
            if source == target:
                raise GraphFormatError(f"self-loop on node {id_to_label[source]!r}")
            u, v = order[id_to_label[source]], order[id_to_label[target]]
            edges.add((min(u, v), max(u, v)))

        if parsed.is_directed():
            logger.debug("Directed GML input treated as undirected")
        return Graph(list(order), sorted(edges))

    def serialize(self, g: Graph) -> str:
        # generate_gml writes each node key as its label
        out = nx.Graph()
        out.add_nodes_from(g.labels)
        out.add_edges_from((g.label(u), g.label(v)) for u, v in g.edges())
        return "\n".join(nx.generate_gml(out)) + "\n"


def parse_gml(text: str, known_labels: Sequence[str] = ()) -> Graph:
    """
    Convenience function to parse GML text.

    Raises:
        GraphFormatError: missing graph block, undeclared edge endpoint,
            self-loop or unparseable input
    """
    return GMLReader().parse(text, known_labels)


def serialize_gml(g: Graph) -> str:
    """Convenience function to render ``g`` as GML."""
    return GMLReader().serialize(g)
