"""
Per-vertex permanence cache with incremental recomputation.

Toggling edge (u, v) can only change the permanence of u, v and their common
neighbors: every other vertex keeps its degree, its community counts and the
edge set among its own neighbors.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from community_veil.community.structure import CommunityStructure
from community_veil.exceptions import CacheMismatchError, GraphUpdateError
from community_veil.graph import Graph
from community_veil.models import EdgeUpdate
from community_veil.permanence.score import (
    ToggledNeighbors,
    VertexPermanenceParts,
    compute_parts,
    mean_permanence,
)

logger = logging.getLogger(__name__)


def affected_set(g: Graph, u: int, v: int) -> frozenset[int]:
    """
    Vertices whose permanence may change when edge (u, v) is toggled.

    Common neighbors are the same before and after the toggle, so ``g`` may be
    either side of the update.
    """
    if u == v:
        raise GraphUpdateError(f"toggle endpoints must differ, got {u} twice", node=u)
    return frozenset({u, v}) | (g.neighbors(u) & g.neighbors(v))


@dataclass(frozen=True)
class PermanencePreview:
    """Permanence values of a hypothetical single-edge update."""

    update: EdgeUpdate
    changed: dict[int, VertexPermanenceParts]
    graph_permanence: float


class PermanenceCache:
    """
    Permanence parts of every vertex for one (graph, partition) pair.

    The generation stamp records the revisions the cache was computed for;
    using it against any other graph or partition raises CacheMismatchError.
    """

    def __init__(
        self,
        graph: Graph,
        partition: CommunityStructure,
        parts: Sequence[VertexPermanenceParts],
    ) -> None:
        self.graph = graph
        self.partition = partition
        self.parts: tuple[VertexPermanenceParts, ...] = tuple(parts)
        self.graph_permanence = mean_permanence([p.permanence for p in self.parts])
        self.generation = (graph.revision, partition.revision)

    @classmethod
    def build(cls, g: Graph, cs: CommunityStructure) -> "PermanenceCache":
        """Full computation over every vertex."""
        cs.validate_for(g)
        return cls(g, cs, [compute_parts(g.neighbors, cs.assignment, v) for v in g.nodes()])

    def permanence(self, v: int) -> float:
        return self.parts[v].permanence

    def values(self) -> list[float]:
        return [p.permanence for p in self.parts]

    def check(self, g: Graph, cs: CommunityStructure) -> None:
        if self.generation != (g.revision, cs.revision):
            raise CacheMismatchError(
                "permanence cache does not belong to this graph/partition",
                cache_generation=list(self.generation),
                requested_generation=[g.revision, cs.revision],
            )

    def preview(self, update: EdgeUpdate) -> PermanencePreview:
        """Score ``update`` against the cached graph without applying it."""
        neighbors_of = ToggledNeighbors(self.graph, update)
        changed = {
            w: compute_parts(neighbors_of, self.partition.assignment, w)
            for w in affected_set(self.graph, update.u, update.v)
        }
        values = self.values()
        for w, parts in changed.items():
            values[w] = parts.permanence
        return PermanencePreview(update, changed, mean_permanence(values))

    def __repr__(self) -> str:
        return f"PermanenceCache(n={len(self.parts)}, perm={self.graph_permanence:.6f})"


def rescore_after_update(
    cache: PermanenceCache, g_before: Graph, cs: CommunityStructure, update: EdgeUpdate
) -> PermanenceCache:
    """
    Cache for ``apply_update(g_before, update)`` recomputing only the affected set.

    The returned cache owns the updated graph as ``cache.graph``.

    Raises:
        CacheMismatchError: ``cache`` was not built for (g_before, cs)
        GraphUpdateError: ``update`` is illegal on ``g_before``
    """
    cache.check(g_before, cs)
    preview = cache.preview(update)
    g_after = g_before.with_update(update)
    parts = list(cache.parts)
    for w, new_parts in preview.changed.items():
        parts[w] = new_parts
    return PermanenceCache(g_after, cs, parts)
