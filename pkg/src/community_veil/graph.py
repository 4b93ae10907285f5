"""
Undirected simple graph with stable external labels.

Nodes are dense integer ids 0..n-1 so per-vertex caches can be array indexed;
the external label of every node is preserved for files and reports. Storage
is a networkx Graph that never leaves this module in mutable form.
"""

import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence

import networkx as nx

from community_veil.exceptions import GraphUpdateError, UnknownNodeError
from community_veil.models import EdgeAction, EdgeUpdate

logger = logging.getLogger(__name__)

# Every construction, copy and in-place mutation draws a fresh revision so
# caches can tell graph values apart.
_REVISIONS = itertools.count(1)


class Graph:
    """
    Undirected simple graph over integer node ids.

    Invariants: symmetric adjacency, no self-loops, no parallel edges.
    Public mutators return new graphs; in-place mutation is reserved for
    callers that own their working copy (the greedy editors).
    """

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]] = ()) -> None:
        """
        Build a graph.

        Args:
            labels: External label per node id; must be unique
            edges: Undirected edges as (u, v) id pairs; duplicates collapse
        """
        self._labels: tuple[str, ...] = tuple(str(label) for label in labels)
        self._index: dict[str, int] = {}
        for node, label in enumerate(self._labels):
            if label in self._index:
                raise GraphUpdateError(f"duplicate node label {label!r}", label=label)
            self._index[label] = node

        self._nx = nx.Graph()
        self._nx.add_nodes_from(range(len(self._labels)))
        for u, v in edges:
            self._check(u)
            self._check(v)
            if u == v:
                raise GraphUpdateError(f"self-loop on node {self._labels[u]!r}", u=u)
            self._nx.add_edge(u, v)
        self._revision = next(_REVISIONS)

    # ------------------------------------------------------------------
    # Identity
    # ------------------------------------------------------------------

    @property
    def revision(self) -> int:
        """Token that changes whenever the edge set may have changed."""
        return self._revision

    @property
    def node_count(self) -> int:
        return len(self._labels)

    @property
    def edge_count(self) -> int:
        return self._nx.number_of_edges()

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def label(self, v: int) -> str:
        self._check(v)
        return self._labels[v]

    def node_id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNodeError(f"unknown node label {label!r}", label=label) from None

    def nodes(self) -> range:
        return range(len(self._labels))

    # ------------------------------------------------------------------
    # Adjacency queries
    # ------------------------------------------------------------------

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._nx.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(self._nx.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._nx.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Iterate edges as (u, v) with u < v, in ascending order."""
        for u in range(len(self._labels)):
            for v in sorted(self._nx.adj[u]):
                if u < v:
                    yield (u, v)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def labelled_edges(self) -> list[tuple[str, str]]:
        """Edges as label pairs, each pair and the list sorted lexicographically."""
        pairs = []
        for u, v in self.edges():
            a, b = self._labels[u], self._labels[v]
            pairs.append((a, b) if a <= b else (b, a))
        return sorted(pairs)

    @property
    def nx(self) -> nx.Graph:
        """Read-only networkx view for library algorithms."""
        return nx.restricted_view(self._nx, [], [])

    def is_connected(self) -> bool:
        return self.node_count > 0 and nx.is_connected(self._nx)

    def component_count(self) -> int:
        return nx.number_connected_components(self._nx)

    # ------------------------------------------------------------------
    # Updates
    # ------------------------------------------------------------------

    def copy(self) -> "Graph":
        clone = Graph.__new__(Graph)
        clone._labels = self._labels
        clone._index = self._index
        clone._nx = self._nx.copy()
        clone._revision = next(_REVISIONS)
        return clone

    def with_update(self, update: EdgeUpdate) -> "Graph":
        """Return a new graph with ``update`` applied; this graph is unchanged."""
        self.validate_update(update)
        clone = self.copy()
        clone._apply(update)
        return clone

    def apply_in_place(self, update: EdgeUpdate) -> None:
        """Apply ``update`` to this graph. Caller must hold the only reference."""
        self.validate_update(update)
        self._apply(update)

    def validate_update(self, update: EdgeUpdate) -> None:
        u, v = update.endpoints
        present = self.has_edge(u, v)
        if update.action == EdgeAction.ADD and present:
            raise GraphUpdateError(
                f"duplicate edge ({self._labels[u]}, {self._labels[v]})", u=u, v=v
            )
        if update.action == EdgeAction.DELETE and not present:
            raise GraphUpdateError(
                f"absent edge ({self._labels[u]}, {self._labels[v]})", u=u, v=v
            )

    def _apply(self, update: EdgeUpdate) -> None:
        if update.action == EdgeAction.ADD:
            self._nx.add_edge(update.u, update.v)
        else:
            self._nx.remove_edge(update.u, update.v)
        self._revision = next(_REVISIONS)

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < len(self._labels):
            raise UnknownNodeError(f"unknown node id {v!r}", node=v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self.edge_set() == other.edge_set()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"

    @classmethod
    def from_labelled_edges(
        cls, pairs: Iterable[tuple[str, str]], labels: Sequence[str] = ()
    ) -> "Graph":
        """
        Build a graph from label pairs.

        Node ids follow ``labels`` first, then first appearance in ``pairs``.
        """
        order: dict[str, int] = {}
        for label in labels:
            order.setdefault(str(label), len(order))
        edges = []
        for a, b in pairs:
            u = order.setdefault(str(a), len(order))
            v = order.setdefault(str(b), len(order))
            edges.append((u, v))
        return cls(list(order), edges)


def apply_update(g: Graph, update: EdgeUpdate) -> Graph:
    """
    Apply a single edge update with value semantics.

    Raises:
        GraphUpdateError: adding an existing edge or deleting an absent one
    """
    return g.with_update(update)


def replay(g: Graph, updates: Iterable[EdgeUpdate]) -> Graph:
    """Apply a sequence of updates to a copy of ``g``."""
    result = g.copy()
    for update in updates:
        result.apply_in_place(update)
    return result
