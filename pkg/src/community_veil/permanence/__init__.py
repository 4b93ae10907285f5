"""Permanence scoring and incremental recomputation."""

from community_veil.permanence.cache import (
    PermanenceCache,
    PermanencePreview,
    affected_set,
    rescore_after_update,
)
from community_veil.permanence.score import (
    VertexPermanenceParts,
    graph_permanence,
    vertex_permanence,
    vertex_permanence_after,
)

__all__ = [
    "PermanenceCache",
    "PermanencePreview",
    "VertexPermanenceParts",
    "affected_set",
    "graph_permanence",
    "rescore_after_update",
    "vertex_permanence",
    "vertex_permanence_after",
]
