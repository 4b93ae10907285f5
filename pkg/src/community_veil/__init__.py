"""
Community-Veil: permanence-based community deception and recovery.

This package provides:
- Simple undirected graphs with edge-list and GML readers
- Community detection (Louvain, label propagation) behind a registry
- Permanence scoring with incremental recomputation
- Greedy deception (NEURAL) and recovery (R-NEURAL) of a target community
- Partition-quality metrics and Laplacian spectral distance
- An experiment pipeline, sweeps and report formatting
"""

__version__ = "0.1.0"

from community_veil.models import (
    EdgeAction,
    EdgeUpdate,
    EditLogEntry,
    ExperimentConfig,
    ExperimentReport,
    MetricsRow,
    SpectralDistance,
)

__all__ = [
    "__version__",
    "EdgeAction",
    "EdgeUpdate",
    "EditLogEntry",
    "ExperimentConfig",
    "ExperimentReport",
    "MetricsRow",
    "SpectralDistance",
]
