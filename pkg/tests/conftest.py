"""Shared fixtures: the worked six-node instance and random-instance helpers."""

from __future__ import annotations

import itertools

import pytest

from sscbound import (
    DlvPointSet,
    Graph,
    LeaderSet,
    build_dlv,
    gen_cycle,
    gen_erdos_renyi,
    gen_path,
    make_rng,
    new_graph,
)

# Six-node graph with two leaders whose distance vectors give the worked
# point set {(0,3),(1,2),(1,3),(2,1),(2,2),(3,0)} used across the suite.
GOLDEN_EDGES = [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4), (4, 5)]
GOLDEN_LEADERS = (0, 5)
GOLDEN_POINTS = {(0, 3), (1, 2), (1, 3), (2, 1), (2, 2), (3, 0)}
# The pinned greedy output on that set, with its recorded coordinates.
GOLDEN_GREEDY = [(3, 0), (2, 1), (0, 3), (2, 2), (1, 3)]
GOLDEN_GREEDY_COORDS = [1, 1, 0, 1, 0]
GOLDEN_DELTA = 5

# Five points whose coordinate minima are both tied: coordinate 0's minimum
# (value 1) is shared by three points and coordinate 1's (value 2) by two,
# so no point is a unique minimum in any direction.
CONFLICT5 = [(1, 3), (1, 4), (1, 5), (2, 2), (3, 2)]


@pytest.fixture()
def golden_graph() -> Graph:
    return new_graph(6, GOLDEN_EDGES)


@pytest.fixture()
def golden_leaders() -> LeaderSet:
    return LeaderSet.of(GOLDEN_LEADERS)


@pytest.fixture()
def golden_ps(golden_graph, golden_leaders) -> DlvPointSet:
    return build_dlv(golden_graph, golden_leaders)


@pytest.fixture()
def conflict5_ps() -> DlvPointSet:
    return DlvPointSet.from_points(CONFLICT5)


def random_connected_instance(
    rng, n_max: int = 8, m_max: int = 3, families=("er", "path", "cycle")
):
    """One random connected (graph, leaders) pair for property tests."""
    family = families[int(rng.integers(len(families)))]
    if family == "path":
        n = int(rng.integers(2, n_max + 1))
        g = gen_path(n)
    elif family == "cycle":
        n = int(rng.integers(3, n_max + 1))
        g = gen_cycle(n)
    else:
        n = int(rng.integers(2, n_max + 1))
        p = float(rng.uniform(0.3, 0.9))
        g = gen_erdos_renyi(n, p, seed=rng, connected=True)
    m = int(rng.integers(1, min(m_max, n) + 1))
    leaders = sorted(int(x) for x in rng.choice(n, size=m, replace=False))
    return g, LeaderSet.of(leaders)


def random_point_set(rng, n_points_max: int = 8, m_max: int = 3) -> DlvPointSet:
    """A small synthetic point set (not necessarily from any graph)."""
    m = int(rng.integers(1, m_max + 1))
    hi = min(n_points_max, 5**m)  # only 5^m distinct tuples exist
    count = int(rng.integers(1, hi + 1))
    pts = set()
    while len(pts) < count:
        pts.add(tuple(int(x) for x in rng.integers(0, 5, size=m)))
    return DlvPointSet.from_points(sorted(pts))


def all_leader_subsets(n: int, max_m: int | None = None):
    """Every nonempty leader subset of {0..n-1}, optionally capped in size."""
    hi = n if max_m is None else min(max_m, n)
    for m in range(1, hi + 1):
        yield from itertools.combinations(range(n), m)


def fresh_rng(tag: int):
    return make_rng(tag)
