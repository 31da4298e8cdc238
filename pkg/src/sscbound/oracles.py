"""Independent ground-truth oracles used to validate the fast solvers.

brute_force_pmi enumerates sequences directly and shares no code with the
production solvers. controllability_rank evaluates the rank of the Krylov
controllability matrix of a weighted Laplacian, and verify_rank_dominance samples
random positive weightings to confirm the PMI bound never exceeds that rank.
Everything here favors clarity over speed and is capped to small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .dlv import DlvPointSet, build_dlv
from .errors import BadWeights, InputTooLarge, TooLarge
from .exact import pmi_dp_length
from .graph import Graph, LeaderSet, derive_seed, make_rng

__all__ = [
    "DEFAULT_RANK_TOL",
    "RankSample",
    "RankDominanceReport",
    "brute_force_pmi",
    "weighted_laplacian",
    "controllability_rank",
    "verify_rank_dominance",
]

DEFAULT_RANK_TOL = 1e-8
_RANK_NODE_CAP = 12

PointsLike = Union[DlvPointSet, Iterable[Sequence[int]]]
WeightsLike = Union[Sequence[float], Mapping[tuple[int, int], float]]


def brute_force_pmi(points: PointsLike, max_points: int = 10, prune: bool = True) -> int:
    """Exact longest-PMI length by depth-first search over orderings.

    Builds sequences back to front: a point may be prepended when it is
    strictly below the running componentwise minimum of the chosen suffix in
    some coordinate. With prune=True, branches that cannot beat the best
    known length are cut (this never changes the result).
    """
    if isinstance(points, DlvPointSet):
        pts = list(points.points)
    else:
        pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        return 0
    if len(pts) > max_points:
        raise InputTooLarge(
            f"{len(pts)} points exceeds the brute-force cap of {max_points}"
        )
    m = len(pts[0])
    big = float("inf")
    best = 0

    def dfs(pool: list[tuple[int, ...]], mins: tuple, depth: int) -> None:
        nonlocal best
        if depth > best:
            best = depth
        if prune and depth + len(pool) <= best:
            return
        for idx, p in enumerate(pool):
            if any(p[j] < mins[j] for j in range(m)):
                dfs(
                    pool[:idx] + pool[idx + 1 :],
                    tuple(min(a, b) for a, b in zip(mins, p)),
                    depth + 1,
                )

    dfs(pts, (big,) * m, 0)
    return best


def _weight_list(g: Graph, weights: WeightsLike) -> list[float]:
    edges = list(g.edges())
    if isinstance(weights, Mapping):
        out = []
        seen = set()
        for u, v in edges:
            if (u, v) in weights:
                w = weights[(u, v)]
            elif (v, u) in weights:
                w = weights[(v, u)]
            else:
                raise BadWeights(f"missing weight for edge ({u}, {v})")
            out.append(float(w))
            seen.add((u, v))
        extras = {
            tuple(sorted(k)) for k in weights
        } - seen
        if extras:
            raise BadWeights(f"weights given for non-edges: {sorted(extras)}")
    else:
        out = [float(w) for w in weights]
        if len(out) != len(edges):
            raise BadWeights(
                f"need {len(edges)} weights (sorted edge order), got {len(out)}"
            )
    if any(not np.isfinite(w) or w <= 0.0 for w in out):
        raise BadWeights("edge weights must be finite and strictly positive")
    return out


def weighted_laplacian(g: Graph, weights: WeightsLike) -> np.ndarray:
    """Dense weighted Laplacian L = D - A_w.

    Weights follow sorted edge order (u < v, ascending), or map edge pairs to
    values. Must be strictly positive.
    """
    w = _weight_list(g, weights)
    L = np.zeros((g.n, g.n), dtype=np.float64)
    for (u, v), wt in zip(g.edges(), w):
        L[u, v] -= wt
        L[v, u] -= wt
        L[u, u] += wt
        L[v, v] += wt
    return L


def controllability_rank(
    g: Graph,
    leaders: LeaderSet | Sequence[int],
    weights: WeightsLike,
    tol: float = DEFAULT_RANK_TOL,
) -> int:
    """Rank of the controllability matrix [B, LB, ..., L^(n-1)B].

    B selects the leader nodes. Evaluated by incremental block-Krylov
    orthogonalization: a candidate column joins the basis when its residual
    after projection exceeds tol times the largest raw column norm seen.
    Capped at n <= 12 nodes — this is a validation oracle, not a solver.
    """
    ls = LeaderSet.of(leaders)
    ls.validate_for(g.n)
    if g.n > _RANK_NODE_CAP:
        raise TooLarge(f"rank oracle capped at n <= {_RANK_NODE_CAP}, got {g.n}")
    L = weighted_laplacian(g, weights)
    n = g.n
    basis: list[np.ndarray] = []
    max_norm = 0.0
    block = []
    for v in ls:
        col = np.zeros(n)
        col[v] = 1.0
        block.append(col)
    for _ in range(n):
        accepted = []
        for col in block:
            max_norm = max(max_norm, float(np.linalg.norm(col)))
            r = col.astype(np.float64, copy=True)
            for _pass in range(2):  # two projection passes for stability
                for q in basis:
                    r -= (q @ r) * q
            rn = float(np.linalg.norm(r))
            if rn > tol * max_norm:
                q = r / rn
                basis.append(q)
                accepted.append(q)
        if not accepted or len(basis) == n:
            break
        block = [L @ q for q in accepted]
    return len(basis)


@dataclass(frozen=True)
class RankSample:
    """One random weighting and the rank it produced."""

    seed: int
    weights: tuple[float, ...]
    rank: int
    tol: float

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "weights": list(self.weights),
            "rank": self.rank,
            "tol": self.tol,
        }


@dataclass(frozen=True)
class RankDominanceReport:
    """Outcome of sampling ranks against the exact PMI bound."""

    delta: int
    min_rank: int
    ok: bool
    tol: float
    samples: tuple[RankSample, ...]


def verify_rank_dominance(
    g: Graph,
    leaders: LeaderSet | Sequence[int],
    trials: int = 20,
    seed: int = 0,
    tol: float = DEFAULT_RANK_TOL,
) -> RankDominanceReport:
    """Sample i.i.d. uniform [0.5, 1.5] edge weights and compare ranks to the
    exact PMI bound. ok is True when every sampled rank is at least the bound.

    Per-sample seeds derive deterministically from (seed, sample index) and
    are recorded so any sample can be replayed alone.
    """
    ls = LeaderSet.of(leaders)
    delta = pmi_dp_length(build_dlv(g, ls))
    e = g.edge_count
    samples = []
    for t in range(trials):
        s = derive_seed(seed, t)
        rng = make_rng(s)
        w = tuple(float(x) for x in rng.uniform(0.5, 1.5, e))
        rank = controllability_rank(g, ls, w, tol=tol)
        samples.append(RankSample(seed=s, weights=w, rank=rank, tol=tol))
    min_rank = min(s.rank for s in samples) if samples else g.n
    return RankDominanceReport(
        delta=delta,
        min_rank=min_rank,
        ok=min_rank >= delta,
        tol=tol,
        samples=tuple(samples),
    )
