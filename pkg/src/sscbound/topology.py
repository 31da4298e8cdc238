"""Closed-form bounds for path and cycle graphs, plus explicit witnesses.

Removing the m leaders from a path (cycle) leaves some number c of nonempty
segments. With c below m + 1 (paths) or m (cycles) the longest PMI covers
every node; when c reaches that ceiling, all nodes except the smallest
segment are covered. A further family-specific bound is n minus the smallest
pairwise leader distance.
"""

from __future__ import annotations

from typing import Sequence

from .dlv import DlvPointSet, PmiSequence, build_dlv
from .errors import BadParams, TooFewLeaders, WrongFamily
from .graph import Graph, LeaderSet, bfs_distances, is_connected

__all__ = [
    "path_bound",
    "cycle_bound",
    "min_leader_distance_bound",
    "is_path_graph",
    "is_cycle_graph",
    "full_pmi_witness",
]


def path_bound(n: int, leaders: LeaderSet | Sequence[int]) -> int:
    """Closed-form PMI length for the canonical path 0-1-...-(n-1).

    Returns n when removing the leaders leaves fewer than m + 1 nonempty
    segments, else n minus the smallest segment size.
    """
    ls = LeaderSet.of(leaders)
    if n < 2:
        raise BadParams(f"path needs n >= 2, got {n}")
    ls.validate_for(n)
    pos = sorted(ls)
    segments = [pos[0]]
    segments.extend(pos[k + 1] - pos[k] - 1 for k in range(len(pos) - 1))
    segments.append(n - 1 - pos[-1])
    nonempty = [s for s in segments if s > 0]
    if len(nonempty) < len(ls) + 1:
        return n
    return n - min(nonempty)


def cycle_bound(n: int, leaders: LeaderSet | Sequence[int]) -> int:
    """Closed-form PMI length for the canonical cycle on n nodes.

    Needs at least two leaders. Returns n when removing them leaves fewer
    than m nonempty arcs, else n minus the smallest arc size.
    """
    ls = LeaderSet.of(leaders)
    if n < 3:
        raise BadParams(f"cycle needs n >= 3, got {n}")
    ls.validate_for(n)
    if len(ls) < 2:
        raise TooFewLeaders("cycle bound needs at least two leaders")
    pos = sorted(ls)
    arcs = []
    for k in range(len(pos)):
        nxt = pos[(k + 1) % len(pos)]
        gap = (nxt - pos[k]) % n
        arcs.append(gap - 1)
    nonempty = [a for a in arcs if a > 0]
    if len(nonempty) < len(ls):
        return n
    return n - min(nonempty)


def is_path_graph(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return (
        g.edge_count == g.n - 1
        and max(g.degree(v) for v in range(g.n)) <= 2
        and is_connected(g)
    )


def is_cycle_graph(g: Graph) -> bool:
    if g.n < 3:
        return False
    return all(g.degree(v) == 2 for v in range(g.n)) and is_connected(g)


def min_leader_distance_bound(
    g: Graph, leaders: LeaderSet | Sequence[int]
) -> int:
    """n minus the smallest pairwise leader distance (paths and cycles only)."""
    ls = LeaderSet.of(leaders)
    ls.validate_for(g.n)
    if not (is_path_graph(g) or is_cycle_graph(g)):
        raise WrongFamily("bound applies to path and cycle graphs only")
    if len(ls) < 2:
        raise TooFewLeaders("needs at least two leaders for a pairwise distance")
    best = None
    members = list(ls)
    for a_idx, a in enumerate(members):
        dist = bfs_distances(g, a)
        for b in members[a_idx + 1 :]:
            d = dist[b]
            if best is None or d < best:
                best = d
    return g.n - best


def _position_order(g: Graph) -> list[int]:
    """Node ids in walking order along a path or around a cycle."""
    if is_path_graph(g):
        if g.n == 1:
            return [0]
        start = min(v for v in range(g.n) if g.degree(v) == 1)
    elif is_cycle_graph(g):
        start = 0
    else:
        raise WrongFamily("walk order defined for paths and cycles only")
    order = [start]
    prev = None
    cur = start
    while len(order) < g.n:
        nxt = [v for v in g.adj[cur] if v != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def full_pmi_witness(
    g: Graph,
    leaders: LeaderSet | Sequence[int],
    ps: DlvPointSet | None = None,
) -> PmiSequence | None:
    """Explicit length-n sequence for paths/cycles in the full-coverage case.

    A path with a leaf leader is covered by distance order from that leaf. A
    path or cycle with two adjacent leaders is covered by taking the pair and
    then alternating outward on both sides. Returns None when neither pattern
    applies (the construction, not the bound, is the limit here).
    """
    ls = LeaderSet.of(leaders)
    ls.validate_for(g.n)
    if not (is_path_graph(g) or is_cycle_graph(g)) or g.n < 2:
        return None
    if ps is None:
        ps = build_dlv(g, ls)
    coord_of = {v: j for j, v in enumerate(ls)}
    pos = _position_order(g)
    where = {v: k for k, v in enumerate(pos)}

    def seq_from_nodes(nodes: list[int], coords: list[int]) -> PmiSequence | None:
        dists = [bfs_distances(g, leader) for leader in ls]
        idxs = []
        for v in nodes:
            vec = tuple(dists[j][v] for j in range(len(ls)))
            idxs.append(ps.index_of(vec))
        if len(set(idxs)) != len(idxs):
            return None  # merged vectors: construction does not certify n points
        return PmiSequence(tuple(zip(idxs, coords)))

    if is_path_graph(g):
        leaf_leaders = [v for v in ls if g.degree(v) == 1]
        if leaf_leaders:
            leaf = leaf_leaders[0]
            j = coord_of[leaf]
            dist = bfs_distances(g, leaf)
            nodes = sorted(range(g.n), key=lambda v: dist[v])
            return seq_from_nodes(nodes, [j] * g.n)

    # adjacent leader pair along the walk order (wrapping only on cycles)
    on_cycle = is_cycle_graph(g)
    limit = g.n if on_cycle else g.n - 1
    pair = None
    for k in range(limit):
        a, b = pos[k], pos[(k + 1) % g.n]
        if a in coord_of and b in coord_of:
            pair = (k, a, b)
            break
    if pair is None:
        return None
    q, a, b = pair
    ca, cb = coord_of[a], coord_of[b]
    if on_cycle:
        others = g.n - 2
        left = [pos[(q - t) % g.n] for t in range(1, (others + 1) // 2 + 1)]
        right = [pos[(q + 1 + t) % g.n] for t in range(1, others // 2 + 1)]
    else:
        left = [pos[t] for t in range(q - 1, -1, -1)]
        right = [pos[t] for t in range(q + 2, g.n)]
    nodes = [a, b]
    coords = [ca, cb]
    for t in range(max(len(left), len(right))):
        if t < len(left):
            nodes.append(left[t])
            coords.append(ca)
        if t < len(right):
            nodes.append(right[t])
            coords.append(cb)
    return seq_from_nodes(nodes, coords)
