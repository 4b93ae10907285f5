"""Greedy permanence-driven deception and recovery."""

from community_veil.editing.candidates import (
    external_pull_community,
    inter_candidates,
    intra_candidates,
)
from community_veil.editing.deception import (
    DeceptionRun,
    NeuralDeceiver,
    best_add_candidate,
    best_delete_candidate,
    neural,
)
from community_veil.editing.greedy import EditRun, GreedyEditor
from community_veil.editing.recovery import (
    NeuralRecoverer,
    RecoveryRun,
    best_inter_delete_candidate,
    best_intra_add_candidate,
    r_neural,
)

__all__ = [
    "DeceptionRun",
    "EditRun",
    "GreedyEditor",
    "NeuralDeceiver",
    "NeuralRecoverer",
    "RecoveryRun",
    "best_add_candidate",
    "best_delete_candidate",
    "best_inter_delete_candidate",
    "best_intra_add_candidate",
    "external_pull_community",
    "inter_candidates",
    "intra_candidates",
    "neural",
    "r_neural",
]
