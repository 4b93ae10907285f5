"""
Partition-quality metrics: modularity, coverage, partition quality
(performance) and conductance.

Modularity and coverage share the same per-community counters, so
sum(e_c) / m is coverage by construction.
"""

import logging
from collections.abc import Collection
from dataclasses import dataclass

import networkx as nx

from community_veil.community.structure import CommunityStructure, jaccard
from community_veil.exceptions import MetricError
from community_veil.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommunityCounts:
    """Intra-edge count and degree sum per community, plus m."""

    intra_edges: tuple[int, ...]
    degree_sums: tuple[int, ...]
    edge_count: int


def community_counts(g: Graph, cs: CommunityStructure) -> CommunityCounts:
    cs.validate_for(g)
    intra = [0] * cs.k
    degrees = [0] * cs.k
    for v in g.nodes():
        degrees[cs.assignment[v]] += g.degree(v)
    for u, v in g.edges():
        if cs.assignment[u] == cs.assignment[v]:
            intra[cs.assignment[u]] += 1
    return CommunityCounts(tuple(intra), tuple(degrees), g.edge_count)


def _require_edges(counts: CommunityCounts, metric: str) -> None:
    if counts.edge_count == 0:
        raise MetricError(f"{metric} is undefined on an edgeless graph")


def modularity(g: Graph, cs: CommunityStructure) -> float:
    """
    Newman modularity: sum over communities of e_c/m - (d_c/2m)^2.

    Raises:
        MetricError: edgeless graph
    """
    counts = community_counts(g, cs)
    _require_edges(counts, "modularity")
    m = counts.edge_count
    return sum(
        e / m - (d / (2 * m)) ** 2 for e, d in zip(counts.intra_edges, counts.degree_sums)
    )


def coverage(g: Graph, cs: CommunityStructure) -> float:
    """
    Fraction of edges that are intra-community.

    Raises:
        MetricError: edgeless graph
    """
    counts = community_counts(g, cs)
    _require_edges(counts, "coverage")
    return sum(counts.intra_edges) / counts.edge_count


def partition_quality(g: Graph, cs: CommunityStructure) -> float:
    """
    Performance: share of node pairs classified correctly, i.e. intra pairs
    joined by an edge plus inter pairs without one, over all C(n, 2) pairs.

    Raises:
        MetricError: fewer than two nodes
    """
    n = g.node_count
    if n < 2:
        raise MetricError("partition quality needs at least two nodes", nodes=n)
    counts = community_counts(g, cs)
    intra_edges = sum(counts.intra_edges)
    inter_edges = counts.edge_count - intra_edges
    sizes = [len(c) for c in cs.communities]
    intra_pairs = sum(s * (s - 1) // 2 for s in sizes)
    total_pairs = n * (n - 1) // 2
    inter_non_edges = (total_pairs - intra_pairs) - inter_edges
    return (intra_edges + inter_non_edges) / total_pairs


def community_conductance(g: Graph, cs: CommunityStructure, community: int) -> float:
    """Cut size over the smaller side's volume; 0 when either side has no volume."""
    members = cs.communities[community]
    if len(members) == g.node_count:
        return 0.0
    try:
        return float(nx.conductance(g.nx, members))
    except ZeroDivisionError:
        return 0.0


def conductance(g: Graph, cs: CommunityStructure) -> float:
    """Mean conductance over the communities of ``cs``."""
    cs.validate_for(g)
    if cs.k == 0:
        raise MetricError("conductance is undefined on an empty partition")
    return sum(community_conductance(g, cs, c) for c in range(cs.k)) / cs.k


def target_visibility(cs: CommunityStructure, target: Collection[int]) -> float:
    """Best Jaccard similarity between ``target`` and any community of ``cs``."""
    return max((jaccard(target, community) for community in cs.communities), default=0.0)
