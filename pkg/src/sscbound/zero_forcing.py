"""Zero forcing: iterated color propagation from an input node set.

Color the input set black. Any black node with exactly one white neighbor
forces that neighbor black; repeat until nothing changes. The final black
set is independent of the forcing order, and its size, when the input is a
leader set, is another lower bound on the controllability rank.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, LeaderSet

__all__ = ["DerivedSet", "derived_set", "is_zfs"]


@dataclass(frozen=True)
class DerivedSet:
    """Input nodes (in input order) followed by forced nodes in forcing order."""

    order: tuple[int, ...]
    input_size: int

    @property
    def size(self) -> int:
        return len(self.order)

    def members(self) -> frozenset[int]:
        return frozenset(self.order)

    def forced(self) -> tuple[int, ...]:
        return self.order[self.input_size :]


def derived_set(
    g: Graph, input_set: LeaderSet | Sequence[int], scan: str = "asc"
) -> DerivedSet:
    """Run zero forcing to a fixed point.

    Eligible forcers are processed by node id (ascending by default; the
    "desc" scan exists to exercise order independence of the result set).
    """
    ls = LeaderSet.of(input_set)
    ls.validate_for(g.n)
    if scan not in ("asc", "desc"):
        raise ValueError(f"unknown scan order {scan!r}")
    sign = 1 if scan == "asc" else -1

    black = [False] * g.n
    for v in ls:
        black[v] = True
    white_count = [0] * g.n
    for v in range(g.n):
        white_count[v] = sum(1 for u in g.adj[v] if not black[u])

    ready: list[int] = []
    for v in ls:
        if white_count[v] == 1:
            heapq.heappush(ready, sign * v)

    order = list(ls)
    while ready:
        u = sign * heapq.heappop(ready)
        if white_count[u] != 1:
            continue  # stale entry
        w = next(x for x in g.adj[u] if not black[x])
        black[w] = True
        order.append(w)
        for x in g.adj[w]:
            white_count[x] -= 1
            if black[x] and white_count[x] == 1:
                heapq.heappush(ready, sign * x)
        if white_count[w] == 1:
            heapq.heappush(ready, sign * w)
    return DerivedSet(order=tuple(order), input_size=len(ls))


def is_zfs(g: Graph, input_set: LeaderSet | Sequence[int]) -> bool:
    """True if forcing from the input set colors the whole graph."""
    return derived_set(g, input_set).size == g.n
