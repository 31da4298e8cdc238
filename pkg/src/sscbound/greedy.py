"""Near-linear greedy longest-PMI heuristic.

Each round inspects the per-coordinate minimum sets of the live points. If
some coordinate's minimum is unique that point is appended and removed alone;
otherwise every minimum is tied (a conflict), and the round appends one
member of a smallest tied set, then discards that whole set. The result is
always a valid sequence, never longer than the exact optimum, and reaches it
whenever the optimum uses every distinct point.

Deterministic tie policy (calibrated to the pinned reference run, see
README): in a unique-minimum round the lexicographically largest eligible
point wins, recording the smallest coordinate when the same point qualifies
through several. A conflict round first considers the smallest-cardinality
tied sets and prefers the one whose removal keeps the largest per-coordinate
value span alive (then fewest distinct values erased overall, then the
lexicographically largest member, which is the member appended). If even the
best such choice would sink the sequence below the widest coordinate's value
span, the round instead discards a tied set belonging to a widest coordinate:
that removal costs that coordinate exactly one value, which keeps the output
no shorter than max_i |values in coordinate i| on every input.
"""

from __future__ import annotations

import heapq

from .dlv import DlvPointSet, PmiSequence

__all__ = ["pmi_greedy", "greedy_gap_family"]


def pmi_greedy(ps: DlvPointSet) -> PmiSequence:
    """Greedy longest-PMI sequence in O(m * n log n).

    Uses lazy-deletion value heaps per coordinate plus live-count buckets, so
    each round costs O(m log n) amortized.
    """
    m, points = ps.m, ps.points
    n = ps.point_count
    alive = [True] * n
    # groups[i][v]: point indices with value v in coordinate i, ascending by
    # full vector; dead tails are popped permanently (dead points never revive)
    groups: list[dict[int, list[int]]] = [dict() for _ in range(m)]
    counts: list[dict[int, int]] = [dict() for _ in range(m)]
    heaps: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        gi, ci = groups[i], counts[i]
        for k in ps.sorted_orders[i]:
            v = points[k][i]
            if v not in gi:
                gi[v] = []
                ci[v] = 0
                heapq.heappush(heaps[i], v)
            gi[v].append(k)
            ci[v] += 1
    live_spans = [len(counts[i]) for i in range(m)]

    def kill(k: int) -> None:
        alive[k] = False
        p = points[k]
        for i in range(m):
            counts[i][p[i]] -= 1
            if counts[i][p[i]] == 0:
                live_spans[i] -= 1

    def live_tail(i: int, v: int) -> int:
        """Lexicographically largest live point at value v in coordinate i."""
        g = groups[i][v]
        while not alive[g[-1]]:
            g.pop()
        return g[-1]

    entries: list[tuple[int, int]] = []
    remaining = n
    while remaining > 0:
        tops: list[tuple[int, int]] = []  # (min value, live count) per coordinate
        for i in range(m):
            h = heaps[i]
            while counts[i][h[0]] == 0:
                heapq.heappop(h)
            v = h[0]
            tops.append((v, counts[i][v]))
        singles = [i for i in range(m) if tops[i][1] == 1]
        if singles:
            best_key = None
            pick = None
            for i in singles:
                k = live_tail(i, tops[i][0])
                key = (points[k], -i)
                if best_key is None or key > best_key:
                    best_key, pick = key, (k, i)
            k, i = pick
            entries.append((k, i))
            kill(k)
            remaining -= 1
        else:

            def assess(i: int) -> tuple[tuple, int]:
                """Selection key (to maximize) for discarding coordinate i's
                tied set, and the member that would be appended."""
                v = tops[i][0]
                members = [k for k in groups[i][v] if alive[k]]
                killed = [0] * m
                killed[i] = 1  # the minimum value of coordinate i dies whole
                for c in range(m):
                    if c == i:
                        continue
                    local: dict[int, int] = {}
                    for k in members:
                        w = points[k][c]
                        local[w] = local.get(w, 0) + 1
                    killed[c] = sum(
                        1 for w, cnt in local.items() if counts[c][w] == cnt
                    )
                span_after = max(
                    live_spans[c] - killed[c] for c in range(m)
                )
                k = members[-1]
                key = (span_after, -len(members), -sum(killed), points[k], -i)
                return key, k

            smallest = min(c for _, c in tops)
            best_key = None
            pick = None
            for i in range(m):
                if tops[i][1] != smallest:
                    continue
                key, k = assess(i)
                if best_key is None or key > best_key:
                    best_key, pick = key, (k, i)
            widest = max(live_spans)
            if 1 + best_key[0] < widest:
                # no smallest set preserves the value-span floor; discard a
                # set from a widest coordinate instead (costs it one value)
                best_key = None
                for i in range(m):
                    if live_spans[i] != widest:
                        continue
                    key, k = assess(i)
                    if best_key is None or key > best_key:
                        best_key, pick = key, (k, i)
            k, j = pick
            entries.append((k, j))
            v = tops[j][0]
            for member in groups[j][v]:
                if alive[member]:
                    kill(member)
                    remaining -= 1
    return PmiSequence(tuple(entries))


def greedy_gap_family(k: int) -> DlvPointSet:
    """Two-coordinate family where greedy can land below the exact optimum.

    Contains the staircase pairs (j, j), (j, j+1) for j = 2..k+1, the corner
    (k+2, k+2), and the column (1, t) for t = 2..k+2: 3k + 2 points total.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    pts: list[tuple[int, int]] = []
    for j in range(2, k + 2):
        pts.append((j, j))
        pts.append((j, j + 1))
    pts.append((k + 2, k + 2))
    pts.extend((1, t) for t in range(2, k + 3))
    return DlvPointSet.from_points(pts)
