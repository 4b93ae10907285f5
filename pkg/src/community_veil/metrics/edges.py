"""
Edge-level comparison of original, deceived and recovered graphs.
"""

from community_veil.exceptions import MetricError
from community_veil.graph import Graph
from community_veil.models import EdgeRecovery


def edge_jaccard(g1: Graph, g2: Graph) -> float:
    """Jaccard similarity of two edge sets over the same labels."""
    first, second = set(g1.labelled_edges()), set(g2.labelled_edges())
    union = first | second
    return len(first & second) / len(union) if union else 1.0


def edge_recovery(original: Graph, deceived: Graph, recovered: Graph) -> EdgeRecovery:
    """
    Count how many deception edits the recovery reverted and how many new
    edits it introduced.

    Raises:
        MetricError: graphs are not over the same labels
    """
    if not (original.labels == deceived.labels == recovered.labels):
        raise MetricError("edge recovery needs graphs over identical node labels")

    g, g1, g2 = (set(x.labelled_edges()) for x in (original, deceived, recovered))
    added = g1 - g
    deleted = g - g1
    return EdgeRecovery(
        added_by_deception=len(added),
        removed_by_recovery=len(added - g2),
        deleted_by_deception=len(deleted),
        restored_by_recovery=len(deleted & g2),
        extra_deletions=len((g1 - g2) & g),
        extra_additions=len((g2 - g1) - g),
        jaccard_deceived=edge_jaccard(original, deceived),
        jaccard_recovered=edge_jaccard(original, recovered),
    )
