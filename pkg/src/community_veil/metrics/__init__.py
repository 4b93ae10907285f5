"""Partition-quality metrics and graph similarity."""

from community_veil.metrics.edges import edge_jaccard, edge_recovery
from community_veil.metrics.partition import (
    community_conductance,
    community_counts,
    conductance,
    coverage,
    modularity,
    partition_quality,
    target_visibility,
)
from community_veil.metrics.spectral import energy_rank, laplacian_spectrum, spectral_distance

__all__ = [
    "community_conductance",
    "community_counts",
    "conductance",
    "coverage",
    "edge_jaccard",
    "edge_recovery",
    "energy_rank",
    "laplacian_spectrum",
    "modularity",
    "partition_quality",
    "spectral_distance",
    "target_visibility",
]
