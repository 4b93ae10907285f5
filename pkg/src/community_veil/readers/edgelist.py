"""
Whitespace-delimited edge-list reader.

One ``u v`` pair of node labels per line; lines starting with ``#`` are
comments. Node ids follow first appearance.
"""

import logging
from collections.abc import Sequence
from typing import ClassVar

from community_veil.exceptions import GraphFormatError
from community_veil.graph import Graph
from community_veil.models import GraphFormat
from community_veil.readers.base import BaseReader

logger = logging.getLogger(__name__)


class EdgeListReader(BaseReader):
    """Reader for plain edge lists."""

    supported_extensions: ClassVar[list[str]] = ["txt", "edges", "edgelist", "el"]
    graph_format: ClassVar[GraphFormat] = GraphFormat.EDGELIST

    def parse(self, text: str, known_labels: Sequence[str] = ()) -> Graph:
        pairs: list[tuple[str, str]] = []
        seen: set[frozenset[str]] = set()
        duplicates = 0

        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue

            tokens = line.split()
            if len(tokens) != 2:
                raise GraphFormatError(
                    f"expected 2 node labels, found {len(tokens)}", line=line_no
                )
            a, b = tokens
            if a == b:
                raise GraphFormatError(f"self-loop on node {a!r}", line=line_no)

            key = frozenset((a, b))
            if key in seen:
                duplicates += 1
            seen.add(key)
            pairs.append((a, b))

        if duplicates:
            logger.debug(f"Collapsed {duplicates} duplicate edge lines")
        return Graph.from_labelled_edges(pairs, labels=known_labels)

    def serialize(self, g: Graph) -> str:
        """Sorted ``label label`` lines; isolated nodes are not representable."""
        return "".join(f"{a} {b}\n" for a, b in g.labelled_edges())


def parse_edge_list(text: str, known_labels: Sequence[str] = ()) -> Graph:
    """
    Convenience function to parse edge-list text.

    Raises:
        GraphFormatError: malformed line or self-loop, with its line number
    """
    return EdgeListReader().parse(text, known_labels)


def serialize_edge_list(g: Graph) -> str:
    """Convenience function to render ``g`` as a sorted edge list."""
    return EdgeListReader().serialize(g)
