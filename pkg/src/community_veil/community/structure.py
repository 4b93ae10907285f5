"""
Disjoint community structures and their text/JSON forms.
"""

import itertools
import logging
from collections.abc import Collection, Iterable, Sequence

from community_veil.exceptions import PartitionError, UnknownNodeError
from community_veil.graph import Graph

logger = logging.getLogger(__name__)

_REVISIONS = itertools.count(1)


class CommunityStructure:
    """
    A partition CS = {C_0, ..., C_{k-1}} of the node ids 0..n-1.

    Communities are non-empty, pairwise disjoint and cover every node.
    Instances are immutable.
    """

    def __init__(self, assignment: Sequence[int]) -> None:
        """
        Build from a community index per node.

        Raises:
            PartitionError: indices are not exactly 0..k-1 or a community is empty
        """
        self._assignment: tuple[int, ...] = tuple(int(c) for c in assignment)
        k = max(self._assignment, default=-1) + 1
        members: list[set[int]] = [set() for _ in range(k)]
        for node, index in enumerate(self._assignment):
            if index < 0:
                raise PartitionError(f"negative community index for node {node}", node=node)
            members[index].add(node)
        for index, community in enumerate(members):
            if not community:
                raise PartitionError(f"community {index} is empty", community=index)
        self._communities: tuple[frozenset[int], ...] = tuple(frozenset(c) for c in members)
        self._revision = next(_REVISIONS)

    @classmethod
    def from_sets(cls, communities: Iterable[Collection[int]], node_count: int) -> "CommunityStructure":
        """
        Build from node sets, keeping their order as community indices.

        Raises:
            PartitionError: sets overlap, miss a node, or reference an unknown id
        """
        assignment = [-1] * node_count
        for index, community in enumerate(communities):
            for node in community:
                if not 0 <= node < node_count:
                    raise PartitionError(f"unknown node id {node}", node=node)
                if assignment[node] != -1:
                    raise PartitionError(f"node {node} is in two communities", node=node)
                assignment[node] = index
        missing = [node for node, index in enumerate(assignment) if index == -1]
        if missing:
            raise PartitionError(f"{len(missing)} nodes are not covered", nodes=missing[:10])
        return cls(assignment)

    @classmethod
    def canonical(cls, communities: Iterable[Collection[int]], node_count: int) -> "CommunityStructure":
        """Build from node sets, indexing communities by their smallest node id."""
        ordered = sorted((sorted(c) for c in communities if c), key=lambda c: c[0])
        return cls.from_sets(ordered, node_count)

    @classmethod
    def singletons(cls, node_count: int) -> "CommunityStructure":
        return cls(range(node_count))

    @classmethod
    def single(cls, node_count: int) -> "CommunityStructure":
        return cls([0] * node_count)

    # ------------------------------------------------------------------

    @property
    def revision(self) -> int:
        return self._revision

    @property
    def assignment(self) -> tuple[int, ...]:
        return self._assignment

    @property
    def communities(self) -> tuple[frozenset[int], ...]:
        return self._communities

    @property
    def k(self) -> int:
        return len(self._communities)

    @property
    def node_count(self) -> int:
        return len(self._assignment)

    def community_of(self, v: int) -> int:
        if not 0 <= v < len(self._assignment):
            raise UnknownNodeError(f"unknown node id {v!r}", node=v)
        return self._assignment[v]

    def is_intra(self, u: int, v: int) -> bool:
        return self.community_of(u) == self.community_of(v)

    def index_of(self, nodes: Collection[int]) -> int:
        """
        Index of the community equal to ``nodes``.

        Raises:
            PartitionError: ``nodes`` is not exactly one community
        """
        target = frozenset(nodes)
        for index, community in enumerate(self._communities):
            if community == target:
                return index
        raise PartitionError("node set is not a community of this structure", size=len(target))

    def largest(self) -> int:
        """Index of the largest community; ties go to the smallest index."""
        return max(range(self.k), key=lambda i: (len(self._communities[i]), -i))

    def validate_for(self, g: Graph) -> None:
        if self.node_count != g.node_count:
            raise PartitionError(
                f"partition covers {self.node_count} nodes, graph has {g.node_count}",
            )

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_label_lists(self, g: Graph) -> list[list[str]]:
        return [[g.label(v) for v in sorted(c)] for c in self._communities]

    def to_text(self, g: Graph) -> str:
        """One line per community, space-separated node labels."""
        return "".join(" ".join(labels) + "\n" for labels in self.to_label_lists(g))

    @classmethod
    def parse_text(cls, text: str, g: Graph) -> "CommunityStructure":
        """Inverse of :meth:`to_text`; blank and ``#`` lines are ignored."""
        communities = []
        for line in text.splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                communities.append([g.node_id(label) for label in line.split()])
        return cls.from_sets(communities, g.node_count)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommunityStructure):
            return NotImplemented
        return self._assignment == other._assignment

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        sizes = [len(c) for c in self._communities]
        return f"CommunityStructure(k={self.k}, sizes={sizes})"


def jaccard(a: Collection[int], b: Collection[int]) -> float:
    sa, sb = set(a), set(b)
    union = len(sa | sb)
    return len(sa & sb) / union if union else 0.0


def match_community(cs: CommunityStructure, target_nodes: Collection[int]) -> int:
    """
    Map a known node set onto a community of ``cs``.

    Returns the community with the highest Jaccard similarity to
    ``target_nodes``; ties go to the smallest community index.

    Raises:
        PartitionError: empty target
        UnknownNodeError: target references an id outside the partition
    """
    if not target_nodes:
        raise PartitionError("target node set is empty")
    for node in target_nodes:
        cs.community_of(node)

    best_index, best_score = 0, -1.0
    for index, community in enumerate(cs.communities):
        score = jaccard(target_nodes, community)
        if score > best_score:
            best_index, best_score = index, score
    return best_index
