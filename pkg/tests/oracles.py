"""
Brute-force reference implementations of the greedy editors.

Every score here is computed by rebuilding the updated graph and scoring it
from scratch; nothing goes through the incremental cache.
"""

from collections import Counter

from community_veil.community.structure import CommunityStructure
from community_veil.graph import Graph, replay
from community_veil.models import EdgeAction, EdgeUpdate, ExperimentReport
from community_veil.permanence import graph_permanence, vertex_permanence


def _pull(g: Graph, cs: CommunityStructure, a: int, community: int) -> int | None:
    counts = Counter(cs.assignment[w] for w in g.neighbors(a) if cs.assignment[w] != community)
    if not counts:
        return None
    top = max(counts.values())
    return min(c for c, n in counts.items() if n == top)


def brute_force_best(
    g: Graph,
    cs: CommunityStructure,
    community: int,
    action: EdgeAction,
    inter: bool,
    sign: int,
) -> tuple[EdgeUpdate, float] | None:
    """
    Enumerate every ordered node pair, keep the legal members of one
    candidate family and rank them by single-vertex permanence change.
    """
    members = cs.communities[community]
    best: tuple[tuple[float, tuple[str, str]], EdgeUpdate, float] | None = None
    for a in sorted(members):
        pull = _pull(g, cs, a, community) if inter else None
        for b in g.nodes():
            if a == b or (action == EdgeAction.DELETE) != g.has_edge(a, b):
                continue
            if inter and (pull is None or cs.assignment[b] != pull):
                continue
            if not inter and (b not in members or g.label(a) > g.label(b)):
                continue
            update = EdgeUpdate(action=action, u=a, v=b)
            before = vertex_permanence(g, cs, a).permanence
            after = vertex_permanence(g.with_update(update), cs, a).permanence
            delta = before - after if sign > 0 else after - before
            key = (-delta, (g.label(a), g.label(b)))
            if best is None or key < best[0]:
                best = (key, update, delta)
    return (best[1], best[2]) if best else None


def brute_force_step(
    g: Graph, cs: CommunityStructure, community: int, sign: int
) -> EdgeUpdate | None:
    """
    One greedy iteration: deception (sign +1) or recovery (sign -1).

    The inter-community pick wins when its graph-level change is positive
    and at least the intra pick's.
    """
    if sign > 0:
        families = [(EdgeAction.ADD, True), (EdgeAction.DELETE, False)]
    else:
        families = [(EdgeAction.DELETE, True), (EdgeAction.ADD, False)]
    base = graph_permanence(g, cs)
    scored: list[tuple[EdgeUpdate, float] | None] = []
    for action, inter in families:
        found = brute_force_best(g, cs, community, action, inter, sign)
        if found is None:
            scored.append(None)
            continue
        after = graph_permanence(g.with_update(found[0]), cs)
        scored.append((found[0], base - after if sign > 0 else after - base))

    first, second = scored
    if first is not None and first[1] > 0 and (second is None or first[1] >= second[1]):
        return first[0]
    if second is not None and second[1] > 0:
        return second[0]
    return None


def check_logged_permanence(g: Graph, cs: CommunityStructure, report: ExperimentReport) -> None:
    """
    Replay both edit logs of ``report`` on ``g`` and rescore from scratch.

    Every logged graph permanence must match the recomputed value within 1e-9,
    falling through deception and rising through recovery.
    """
    current, previous = g, graph_permanence(g, cs)
    for entries, sign in ((report.deception_log, -1), (report.recovery_log, 1)):
        for entry in entries:
            current = replay(current, [entry.update])
            value = graph_permanence(current, cs)
            assert abs(value - entry.graph_permanence) <= 1e-9, (entry, value)
            assert sign * (value - previous) >= -1e-9, (entry, previous, value)
            previous = value
