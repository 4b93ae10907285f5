"""
Community detectors and the registry that names them.

Every detector takes a graph and a seed and returns a canonical
CommunityStructure (communities indexed by their smallest node id).
Detectors never see any "true" partition.
"""

import logging
import random
from collections import Counter
from collections.abc import Callable
from typing import ClassVar

import networkx as nx

from community_veil.community.structure import CommunityStructure
from community_veil.config import settings
from community_veil.exceptions import DetectorError
from community_veil.graph import Graph

logger = logging.getLogger(__name__)

Detector = Callable[[Graph, int], CommunityStructure]


class DetectorRegistry:
    """
    Registry of community detectors by name.

    Additional detectors (e.g. a map-equation optimizer) plug in with
    ``DetectorRegistry.register("name", func)`` without touching callers.
    """

    _detectors: ClassVar[dict[str, Detector]] = {}

    @classmethod
    def register(cls, name: str, detector: Detector) -> None:
        """Register a detector under ``name``."""
        cls._detectors[name] = detector
        logger.debug(f"Registered detector: {name}")

    @classmethod
    def get(cls, name: str) -> Detector:
        try:
            return cls._detectors[name]
        except KeyError:
            raise DetectorError(
                f"unknown detector {name!r}", known=sorted(cls._detectors)
            ) from None

    @classmethod
    def names(cls) -> list[str]:
        return sorted(cls._detectors)


def detect(name: str, g: Graph, seed: int) -> CommunityStructure:
    """Run the detector registered as ``name``."""
    cs = DetectorRegistry.get(name)(g, seed)
    logger.info(f"{name} (seed={seed}) found {cs.k} communities on {g!r}")
    return cs


def _require_nodes(g: Graph) -> None:
    if g.node_count == 0:
        raise DetectorError("cannot detect communities on an empty graph")


def detect_louvain(g: Graph, seed: int) -> CommunityStructure:
    """
    Louvain modularity optimization.

    The seed drives networkx's node visiting order, so the result is
    deterministic for a fixed (graph, seed). Edgeless graphs yield singletons.
    """
    _require_nodes(g)
    if g.edge_count == 0:
        return CommunityStructure.singletons(g.node_count)
    communities = nx.community.louvain_communities(g.nx, seed=seed)
    return CommunityStructure.canonical(communities, g.node_count)


def detect_label_propagation(
    g: Graph, seed: int, max_sweeps: int | None = None
) -> CommunityStructure:
    """
    Asynchronous label propagation.

    Nodes are visited in a seeded random order each sweep and adopt a most
    frequent neighbor label. Ties: a node whose current label is among the
    most frequent ones keeps it; otherwise it takes the smallest of them.
    Stops after a sweep with no change or after ``max_sweeps`` sweeps.
    """
    _require_nodes(g)
    max_sweeps = max_sweeps or settings.label_propagation_max_sweeps
    rng = random.Random(seed)
    labels = list(g.nodes())
    order = list(g.nodes())

    for sweep in range(1, max_sweeps + 1):
        rng.shuffle(order)
        changed = False
        for v in order:
            neighbors = g.neighbors(v)
            if not neighbors:
                continue
            counts = Counter(labels[w] for w in neighbors)
            top = max(counts.values())
            plurality = [label for label, count in counts.items() if count == top]
            if labels[v] in plurality:
                continue
            labels[v] = min(plurality)
            changed = True
        if not changed:
            logger.debug(f"Label propagation converged after {sweep} sweeps")
            break
    else:
        logger.warning(f"Label propagation hit the {max_sweeps}-sweep cap without converging")

    groups: dict[int, list[int]] = {}
    for v, label in enumerate(labels):
        groups.setdefault(label, []).append(v)
    return CommunityStructure.canonical(groups.values(), g.node_count)


DetectorRegistry.register("louvain", detect_louvain)
DetectorRegistry.register("labelprop", detect_label_propagation)
