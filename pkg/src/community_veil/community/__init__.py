"""Community structures and community detection."""

from community_veil.community.detectors import (
    DetectorRegistry,
    detect,
    detect_label_propagation,
    detect_louvain,
)
from community_veil.community.structure import CommunityStructure, jaccard, match_community

__all__ = [
    "CommunityStructure",
    "DetectorRegistry",
    "detect",
    "detect_label_propagation",
    "detect_louvain",
    "jaccard",
    "match_community",
]
