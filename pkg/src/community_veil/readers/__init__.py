"""Graph file readers for edge lists and GML."""

from collections.abc import Sequence
from pathlib import Path

from community_veil.graph import Graph
from community_veil.models import GraphFormat
from community_veil.readers.base import BaseReader, ReaderRegistry
from community_veil.readers.edgelist import EdgeListReader, parse_edge_list, serialize_edge_list
from community_veil.readers.gml import GMLReader, parse_gml, serialize_gml

# Register all readers
ReaderRegistry.register(EdgeListReader)
ReaderRegistry.register(GMLReader)


def load_graph(
    file_path: Path,
    graph_format: GraphFormat | None = None,
    known_labels: Sequence[str] = (),
) -> Graph:
    """Read a graph file with the reader matching its format or extension."""
    return ReaderRegistry.get_reader(file_path, graph_format).read(file_path, known_labels)


def save_graph(g: Graph, file_path: Path, graph_format: GraphFormat | None = None) -> None:
    """Write a graph file with the reader matching its format or extension."""
    reader = ReaderRegistry.get_reader(file_path, graph_format)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(reader.serialize(g), encoding="utf-8")


__all__ = [
    "BaseReader",
    "ReaderRegistry",
    "EdgeListReader",
    "GMLReader",
    "load_graph",
    "save_graph",
    "parse_edge_list",
    "parse_gml",
    "serialize_edge_list",
    "serialize_gml",
]
