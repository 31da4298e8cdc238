"""Exact longest-PMI solvers: recursive branch-and-prune and a compressed DP.

Both return certified sequences, not just lengths. The DP works on
per-coordinate value ranks, so its table has prod_i (z_i + 1) cells where z_i
is the number of distinct values in coordinate i; only value order matters,
never magnitude. Small tables run on a pure-Python memoized engine (cheap
setup), large ones on a vectorized numpy sweep; both evaluate the same
recurrence and are cross-checked in the test suite.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dlv import DlvPointSet, PmiSequence
from .errors import InputTooLarge, TableTooLarge

__all__ = [
    "DEFAULT_CELL_CAP",
    "DEFAULT_RECURSION_CAP",
    "DpSolve",
    "compress_coordinates",
    "indicator",
    "solve_dp",
    "pmi_dp",
    "pmi_dp_length",
    "pmi_recursive",
]

DEFAULT_CELL_CAP = 2**28
DEFAULT_RECURSION_CAP = 20

# table sizes up to this run on the pure-Python engine (lower fixed overhead)
_PYTHON_ENGINE_CELLS = 4096


def compress_coordinates(ps: DlvPointSet) -> list[dict[int, int]]:
    """Per-coordinate map from value to dense rank (0-based, ascending)."""
    return [
        {v: r for r, v in enumerate(vals)} for vals in ps.unique_values
    ]


def indicator(ps: DlvPointSet, c: Sequence[float], i: int) -> int:
    """1 if some point sits exactly at threshold c in coordinate i and at or
    above c everywhere else, otherwise 0.

    Thresholds may use math.inf as an exceeded-all-values sentinel; a sentinel
    in coordinate i forces 0.
    """
    if len(c) != ps.m:
        raise ValueError(f"threshold vector needs {ps.m} coordinates")
    if math.isinf(c[i]):
        return 0
    for p in ps.points:
        if p[i] == c[i] and all(p[j] >= c[j] for j in range(ps.m) if j != i):
            return 1
    return 0


@dataclass
class DpSolve:
    """Result of one DP solve: the bound, a certifying sequence, and stats."""

    delta: int
    sequence: PmiSequence
    dims: tuple[int, ...]
    cells: int
    cells_touched: int
    runtime_ms: float
    engine: str
    _table: object = None  # dict (python engine) or ndarray (numpy engine)

    def alpha(self, r: tuple[int, ...]) -> int:
        """Table value at rank-threshold r (0 on the sentinel boundary)."""
        if isinstance(self._table, dict):
            return self._table.get(tuple(r), 0)
        return int(self._table[tuple(r)])

    def to_report(self, ps: DlvPointSet) -> dict:
        return {
            "method": "dp",
            "delta": self.delta,
            "witness": self.sequence.witness_pairs(ps),
            "table_cells_touched": self.cells_touched,
            "runtime_ms": self.runtime_ms,
        }


def _ranks(ps: DlvPointSet) -> tuple[list[tuple[int, ...]], list[int]]:
    maps = compress_coordinates(ps)
    R = [
        tuple(maps[i][p[i]] for i in range(ps.m)) for p in ps.points
    ]
    z = [len(vals) for vals in ps.unique_values]
    return R, z


def _rank_buckets(
    ps: DlvPointSet, R: list[tuple[int, ...]]
) -> list[dict[int, list[int]]]:
    """buckets[i][rank] lists point indices at that rank, by representative id."""
    buckets: list[dict[int, list[int]]] = [dict() for _ in range(ps.m)]
    by_rep = sorted(range(ps.point_count), key=ps.representative)
    for k in by_rep:
        for i in range(ps.m):
            buckets[i].setdefault(R[k][i], []).append(k)
    return buckets


def _certify(
    buckets: list[dict[int, list[int]]],
    R: list[tuple[int, ...]],
    r: tuple[int, ...],
    i: int,
) -> int | None:
    """Smallest-representative point at rank r_i in coordinate i dominating r
    elsewhere, or None."""
    for k in buckets[i].get(r[i], ()):
        rk = R[k]
        ok = True
        for j, rj in enumerate(r):
            if j != i and rk[j] < rj:
                ok = False
                break
        if ok:
            return k
    return None


def _table_python(
    m: int,
    dims: tuple[int, ...],
    buckets: list[dict[int, list[int]]],
    R: list[tuple[int, ...]],
) -> dict[tuple[int, ...], int]:
    """Memoized top-down evaluation over the whole rank box."""
    memo: dict[tuple[int, ...], int] = {}
    root = (0,) * m
    stack = [root]
    while stack:
        r = stack[-1]
        if r in memo:
            stack.pop()
            continue
        if any(r[i] == dims[i] - 1 for i in range(m)):
            memo[r] = 0
            stack.pop()
            continue
        missing = []
        for i in range(m):
            up = r[:i] + (r[i] + 1,) + r[i + 1 :]
            if up not in memo:
                missing.append(up)
        if missing:
            stack.extend(missing)
            continue
        best = 0
        for i in range(m):
            up = r[:i] + (r[i] + 1,) + r[i + 1 :]
            fired = 1 if _certify(buckets, R, r, i) is not None else 0
            val = memo[up] + fired
            if val > best:
                best = val
        memo[r] = best
        stack.pop()
    return memo


def _table_numpy(
    m: int, dims: tuple[int, ...], R: list[tuple[int, ...]]
) -> np.ndarray:
    """Vectorized sweep in descending total-rank order (dependencies first)."""
    cells = int(np.prod(dims))
    Rt = np.asarray(R, dtype=np.int64)
    corner = np.zeros(dims, dtype=np.uint8)
    corner[tuple(Rt.T)] = 1
    # bit i of bits[r] = 1 iff some point has rank exactly r_i in coordinate i
    # and rank >= r_j elsewhere: suffix-max of the corner mask along axes j != i
    pack_dtype = np.uint8 if m <= 8 else np.uint32 if m <= 32 else np.uint64
    bits = np.zeros(cells, dtype=pack_dtype)
    for i in range(m):
        a = corner
        for j in range(m):
            if j == i:
                continue
            a = np.flip(np.maximum.accumulate(np.flip(a, axis=j), axis=j), axis=j)
        bits |= np.ascontiguousarray(a).ravel().astype(pack_dtype) << i
    del corner

    sums = np.zeros(dims, dtype=np.int32)
    for i in range(m):
        shape = [1] * m
        shape[i] = dims[i]
        sums += np.arange(dims[i], dtype=np.int32).reshape(shape)
    s_flat = sums.ravel()
    del sums
    order = np.argsort(s_flat, kind="stable").astype(np.int32)
    smax = int(s_flat[order[-1]])
    bounds = np.searchsorted(s_flat[order], np.arange(smax + 2))
    del s_flat

    strides = [1] * m
    for i in range(m - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]

    A = np.zeros(cells, dtype=np.int32)
    for s in range(smax, -1, -1):
        F = order[bounds[s] : bounds[s + 1]]
        if F.size == 0:
            continue
        best = np.zeros(F.size, dtype=np.int32)
        fbits = bits[F]
        for i in range(m):
            val = ((fbits >> i) & 1).astype(np.int32)
            ci = (F // strides[i]) % dims[i]
            interior = ci < dims[i] - 1
            if interior.any():
                val[interior] += A[F[interior] + strides[i]]
            np.maximum(best, val, out=best)
        A[F] = best
    return A.reshape(dims)


def _walk_witness(
    solve_alpha,
    m: int,
    dims: tuple[int, ...],
    buckets: list[dict[int, list[int]]],
    R: list[tuple[int, ...]],
) -> list[tuple[int, int]]:
    """Follow the recurrence argmax from the origin, emitting certified points."""
    entries: list[tuple[int, int]] = []
    r = (0,) * m
    while solve_alpha(r) > 0:
        target = solve_alpha(r)
        chosen = None
        for i in range(m):
            if r[i] == dims[i] - 1:
                continue
            up = r[:i] + (r[i] + 1,) + r[i + 1 :]
            cert = _certify(buckets, R, r, i)
            fired = 1 if cert is not None else 0
            if solve_alpha(up) + fired == target:
                chosen = (i, up, cert, fired)
                break
        if chosen is None:  # cannot happen if the table satisfies its recurrence
            raise AssertionError(f"no recurrence branch matches alpha at {r}")
        i, up, cert, fired = chosen
        if fired:
            entries.append((cert, i))
        r = up
    return entries


def solve_dp(
    ps: DlvPointSet,
    cell_cap: int = DEFAULT_CELL_CAP,
    engine: str = "auto",
) -> DpSolve:
    """Run the compressed DP and reconstruct a certifying sequence.

    Raises TableTooLarge (reporting the estimated cell count) when the rank
    box prod_i (z_i + 1) exceeds cell_cap.
    """
    R, z = _ranks(ps)
    dims = tuple(zi + 1 for zi in z)
    cells = 1
    for d in dims:
        cells *= d
    if cells > cell_cap:
        raise TableTooLarge(
            f"DP table with dims {dims} needs an estimated {cells} cells, "
            f"above the cap of {cell_cap}"
        )
    if engine == "auto":
        engine = "python" if cells <= _PYTHON_ENGINE_CELLS else "numpy"
    if engine not in ("python", "numpy"):
        raise ValueError(f"unknown engine {engine!r}")

    buckets = _rank_buckets(ps, R)
    t0 = time.perf_counter()
    if engine == "python":
        memo = _table_python(ps.m, dims, buckets, R)
        table: object = memo

        def alpha(r):
            return memo.get(r, 0)

        touched = len(memo)
    else:
        arr = _table_numpy(ps.m, dims, R)
        table = arr

        def alpha(r):
            return int(arr[r])

        touched = cells
    entries = _walk_witness(alpha, ps.m, dims, buckets, R)
    runtime_ms = (time.perf_counter() - t0) * 1000.0
    delta = alpha((0,) * ps.m)
    if len(entries) != delta:
        raise AssertionError(
            f"witness walk emitted {len(entries)} points for a table value of {delta}"
        )
    return DpSolve(
        delta=delta,
        sequence=PmiSequence(tuple(entries)),
        dims=dims,
        cells=cells,
        cells_touched=touched,
        runtime_ms=runtime_ms,
        engine=engine,
        _table=table,
    )


def pmi_dp(ps: DlvPointSet, cell_cap: int = DEFAULT_CELL_CAP) -> PmiSequence:
    """Longest-PMI witness via the compressed DP."""
    return solve_dp(ps, cell_cap=cell_cap).sequence


def pmi_dp_length(ps: DlvPointSet, cell_cap: int = DEFAULT_CELL_CAP) -> int:
    """Longest-PMI length via the compressed DP."""
    return solve_dp(ps, cell_cap=cell_cap).delta


def pmi_recursive(
    ps: DlvPointSet, max_points: int = DEFAULT_RECURSION_CAP
) -> PmiSequence:
    """Exact longest PMI by recursion over tied-minimum removals.

    When some coordinate has a unique minimum that point is taken first
    (smallest such coordinate); otherwise the solver branches over every
    coordinate, removing that coordinate's whole tied set and keeping the
    longest result. Subproblems are memoized on the live point set. Guarded
    by max_points (worst case is exponential in conflicts).
    """
    if ps.point_count > max_points:
        raise InputTooLarge(
            f"{ps.point_count} points exceeds the recursion cap of {max_points}"
        )
    points = ps.points
    m = ps.m
    orders = ps.sorted_orders
    memo: dict[frozenset[int], tuple[tuple[int, int | None], ...]] = {}

    def min_set(live: frozenset[int], i: int) -> list[int]:
        best: int | None = None
        members: list[int] = []
        for k in orders[i]:
            if k not in live:
                continue
            v = points[k][i]
            if best is None:
                best = v
            if v != best:
                break
            members.append(k)
        return members

    def solve(live: frozenset[int]) -> tuple[tuple[int, int | None], ...]:
        if not live:
            return ()
        if len(live) == 1:
            (k,) = live
            return ((k, None),)
        hit = memo.get(live)
        if hit is not None:
            return hit
        sets = [min_set(live, i) for i in range(m)]
        singles = [i for i in range(m) if len(sets[i]) == 1]
        if singles:
            i = singles[0]
            k = sets[i][0]
            out = ((k, i),) + solve(live - {k})
        else:
            best: tuple[tuple[int, int | None], ...] | None = None
            for i in range(m):
                head = sets[i][0]
                tail = solve(live - set(sets[i]))
                cand = ((head, i),) + tail
                if best is None or len(cand) > len(best):
                    best = cand
            assert best is not None
            out = best
        memo[live] = out
        return out

    return PmiSequence(solve(frozenset(range(ps.point_count))))
