"""Distance-to-leader point sets, sequence validation, and conflict detection.

Each node of a connected graph yields a vector of hop distances to the
leaders. Nodes with identical vectors are merged into a single point that
remembers its owner nodes. PMI ("progressively monotone increasing")
sequences are orderings where every element is strictly smaller than all
later elements in at least one coordinate; their maximum length lower-bounds
the minimum controllability-matrix rank over positive edge weightings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BadParams, GraphDisconnected
from .graph import Graph, LeaderSet, bfs_distances

__all__ = [
    "DlvPointSet",
    "PmiSequence",
    "CPartition",
    "build_dlv",
    "point_str",
    "validate_pmi",
    "min_sets",
    "detect_conflict",
    "conflict_inclusion_bound",
]

Point = tuple[int, ...]


def point_str(p: Point) -> str:
    """Render a point the way reports do: '(a,b,...)'."""
    return "(" + ",".join(str(x) for x in p) + ")"


@dataclass(frozen=True)
class DlvPointSet:
    """Deduplicated distance-to-leader vectors with per-coordinate orderings.

    Attributes:
        m: number of coordinates (leaders).
        points: distinct vectors in lexicographic order.
        owners: owners[k] lists the node ids that share points[k], ascending.
        sorted_orders: sorted_orders[i] lists point indices ordered by
            (value in coordinate i, full vector lexicographic) — the L^i lists.
        unique_values: unique_values[i] is the ascending tuple of distinct
            values appearing in coordinate i; its length is z_i.
    """

    m: int
    points: tuple[Point, ...]
    owners: tuple[tuple[int, ...], ...]
    sorted_orders: tuple[tuple[int, ...], ...]
    unique_values: tuple[tuple[int, ...], ...]

    @property
    def point_count(self) -> int:
        return len(self.points)

    def representative(self, k: int) -> int:
        """Smallest owner node id of point k."""
        return self.owners[k][0]

    @cached_property
    def _index(self) -> dict[Point, int]:
        return {p: k for k, p in enumerate(self.points)}

    def index_of(self, p: Point) -> int:
        return self._index[tuple(p)]

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> "DlvPointSet":
        """Build directly from raw vectors (owners become synthetic ids)."""
        distinct = sorted({tuple(int(x) for x in p) for p in points})
        if not distinct:
            raise BadParams("point set must be nonempty")
        m = len(distinct[0])
        if m == 0 or any(len(p) != m for p in distinct):
            raise BadParams("all points must share one positive dimension")
        return _assemble(m, distinct, [[k] for k in range(len(distinct))])


def _assemble(
    m: int, points: list[Point], owners: list[list[int]]
) -> DlvPointSet:
    orders = tuple(
        tuple(
            sorted(range(len(points)), key=lambda k: (points[k][i], points[k]))
        )
        for i in range(m)
    )
    uniq = tuple(
        tuple(sorted({p[i] for p in points})) for i in range(m)
    )
    return DlvPointSet(
        m=m,
        points=tuple(points),
        owners=tuple(tuple(o) for o in owners),
        sorted_orders=orders,
        unique_values=uniq,
    )


def build_dlv(g: Graph, leaders: LeaderSet | Sequence[int]) -> DlvPointSet:
    """Compute the deduplicated distance-to-leader point set of (g, leaders).

    Raises GraphDisconnected if any node is unreachable from some leader.
    """
    ls = LeaderSet.of(leaders)
    ls.validate_for(g.n)
    dists = []
    for leader in ls:
        d = bfs_distances(g, leader)
        if any(x is None for x in d):
            raise GraphDisconnected(
                f"node unreachable from leader {leader}; distance vectors undefined"
            )
        dists.append(d)
    by_vec: dict[Point, list[int]] = {}
    for v in range(g.n):
        vec = tuple(dists[j][v] for j in range(len(ls)))
        by_vec.setdefault(vec, []).append(v)
    points = sorted(by_vec)
    return _assemble(len(ls), points, [sorted(by_vec[p]) for p in points])


@dataclass(frozen=True)
class PmiSequence:
    """Ordered (point index, satisfying coordinate) pairs.

    A None coordinate means "unrecorded": validation then accepts the entry
    if any coordinate works.
    """

    entries: tuple[tuple[int, int | None], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def point_indices(self) -> list[int]:
        return [k for k, _ in self.entries]

    def point_tuples(self, ps: DlvPointSet) -> list[Point]:
        return [ps.points[k] for k, _ in self.entries]

    def witness_pairs(self, ps: DlvPointSet) -> list[tuple[str, int | None]]:
        """Report form: [(point string, coordinate), ...]."""
        return [(point_str(ps.points[k]), j) for k, j in self.entries]


def validate_pmi(
    ps: DlvPointSet,
    seq: PmiSequence | Sequence[tuple[int, int | None]],
    strict: bool = True,
) -> bool:
    """Check the strict-inequality order property of a candidate sequence.

    Entries must be distinct point indices. For an entry with recorded
    coordinate j, point[j] must be strictly below all later points in
    coordinate j (strict mode); entries with coordinate None pass if any
    coordinate works. With strict=False all entries are checked the relaxed
    way.
    """
    entries = seq.entries if isinstance(seq, PmiSequence) else tuple(seq)
    idxs = [k for k, _ in entries]
    if len(set(idxs)) != len(idxs):
        return False
    if any(not 0 <= k < ps.point_count for k in idxs):
        return False
    pts = [ps.points[k] for k in idxs]
    for a, (_, j) in enumerate(entries):
        later = pts[a + 1 :]
        if not later:
            continue
        if strict and j is not None:
            if not all(pts[a][j] < q[j] for q in later):
                return False
        else:
            ok = any(
                all(pts[a][i] < q[i] for q in later) for i in range(ps.m)
            )
            if not ok:
                return False
    return True


def min_sets(
    ps: DlvPointSet, live: Iterable[int] | None = None
) -> list[list[int]]:
    """Per-coordinate sets of points attaining the minimum value.

    Returns m lists of point indices; list i holds every live point whose
    coordinate-i value equals the live minimum, in L^i order. `live` defaults
    to all points.
    """
    alive = set(range(ps.point_count)) if live is None else set(live)
    if not alive:
        raise BadParams("min_sets needs at least one live point")
    out: list[list[int]] = []
    for i in range(ps.m):
        best: int | None = None
        members: list[int] = []
        for k in ps.sorted_orders[i]:
            if k not in alive:
                continue
            v = ps.points[k][i]
            if best is None:
                best = v
            if v != best:
                break
            members.append(k)
        out.append(members)
    return out


@dataclass(frozen=True)
class CPartition:
    """A conflict: per-coordinate tied-minimum parts, each of size > 1.

    parts[i] lists the point indices tied at the coordinate-i minimum.
    Distinct parts may share at most one point.
    """

    parts: tuple[tuple[int, ...], ...]

    def union(self) -> set[int]:
        out: set[int] = set()
        for part in self.parts:
            out.update(part)
        return out

    def min_part_size(self) -> int:
        return min(len(part) for part in self.parts)


def detect_conflict(
    ps: DlvPointSet, live: Iterable[int] | None = None
) -> CPartition | None:
    """Return the conflict among live points, or None if some minimum is unique.

    A conflict exists exactly when every coordinate's minimum is attained by
    two or more live points.
    """
    sets = min_sets(ps, live)
    if any(len(s) <= 1 for s in sets):
        return None
    return CPartition(tuple(tuple(s) for s in sets))


def conflict_inclusion_bound(cp: CPartition) -> int:
    """Max points any PMI sequence can include from the conflict's union.

    Equals |union| - min part size + 1.
    """
    if not cp.parts or any(len(part) < 2 for part in cp.parts):
        raise BadParams("not a valid conflict: every part needs size >= 2")
    return len(cp.union()) - cp.min_part_size() + 1
