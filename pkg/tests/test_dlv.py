"""Distance-vector point sets, sequence validation, and conflict analysis."""

from __future__ import annotations

import pytest

from sscbound import (
    BadParams,
    CPartition,
    DlvPointSet,
    GraphDisconnected,
    brute_force_pmi,
    build_dlv,
    conflict_inclusion_bound,
    detect_conflict,
    gen_cycle,
    gen_path,
    make_rng,
    min_sets,
    new_graph,
    point_str,
    validate_pmi,
)
from conftest import (
    CONFLICT5,
    GOLDEN_GREEDY_COORDS,
    GOLDEN_GREEDY,
    GOLDEN_POINTS,
    random_connected_instance,
    random_point_set,
)


def seq_for(ps: DlvPointSet, pts, coords=None):
    """Build (index, coord) entries from tuples for validate_pmi."""
    if coords is None:
        coords = [None] * len(pts)
    return [(ps.index_of(tuple(p)), c) for p, c in zip(pts, coords)]


class TestBuildDlv:
    def test_golden_graph_point_set(self, golden_ps):
        assert set(golden_ps.points) == GOLDEN_POINTS
        assert golden_ps.m == 2
        assert golden_ps.point_count == 6
        # every node owns exactly its own vector here (no merging)
        owner_of = {
            golden_ps.points[k]: golden_ps.owners[k]
            for k in range(golden_ps.point_count)
        }
        assert owner_of[(0, 3)] == (0,)
        assert owner_of[(1, 2)] == (2,)
        assert owner_of[(3, 0)] == (5,)

    def test_path3_single_leader(self):
        ps = build_dlv(gen_path(3), (0,))
        assert set(ps.points) == {(0,), (1,), (2,)}

    def test_cycle4_merges_equidistant_nodes(self):
        ps = build_dlv(gen_cycle(4), (0,))
        assert set(ps.points) == {(0,), (1,), (2,)}
        k = ps.index_of((1,))
        assert ps.owners[k] == (1, 3)
        assert ps.representative(k) == 1

    def test_unreachable_node_raises(self):
        g = new_graph(4, [(0, 1), (2, 3)])
        with pytest.raises(GraphDisconnected):
            build_dlv(g, (0,))

    def test_sorted_orders_break_ties_by_full_vector(self, golden_ps):
        by0 = [golden_ps.points[k] for k in golden_ps.sorted_orders[0]]
        assert by0 == [(0, 3), (1, 2), (1, 3), (2, 1), (2, 2), (3, 0)]
        by1 = [golden_ps.points[k] for k in golden_ps.sorted_orders[1]]
        assert by1 == [(3, 0), (2, 1), (1, 2), (2, 2), (0, 3), (1, 3)]

    def test_unique_values_per_coordinate(self, golden_ps):
        assert golden_ps.unique_values == ((0, 1, 2, 3), (0, 1, 2, 3))

    def test_relabeling_leaves_points_unchanged(self):
        rng = make_rng(31)
        for _ in range(20):
            g, ls = random_connected_instance(rng, n_max=9)
            perm = [int(x) for x in rng.permutation(g.n)]
            edges2 = [(perm[u], perm[v]) for u, v in g.edges()]
            g2 = new_graph(g.n, edges2)
            ls2 = [perm[v] for v in ls]  # keep coordinate j <-> leader j
            a = build_dlv(g, ls)
            b = build_dlv(g2, ls2)
            assert a.points == b.points

    def test_from_points_synthetic_owners(self):
        ps = DlvPointSet.from_points([(2, 0), (0, 2)])
        assert ps.points == ((0, 2), (2, 0))
        assert all(len(o) == 1 for o in ps.owners)

    def test_point_str(self):
        assert point_str((0, 3)) == "(0,3)"
        assert point_str((2,)) == "(2)"


class TestValidatePmi:
    def test_pinned_sequence_with_coords(self, golden_ps):
        entries = seq_for(golden_ps, GOLDEN_GREEDY, GOLDEN_GREEDY_COORDS)
        assert validate_pmi(golden_ps, entries) is True

    def test_wrong_recorded_coordinate_fails_strict(self, golden_ps):
        pts = [(0, 3), (1, 2), (1, 3)]
        strict_bad = seq_for(golden_ps, pts, [0, 0, None])
        assert validate_pmi(golden_ps, strict_bad) is False
        # the same ordering is fine when any coordinate may justify each step
        assert validate_pmi(golden_ps, seq_for(golden_ps, pts)) is True

    def test_single_point_always_valid(self, golden_ps):
        assert validate_pmi(golden_ps, [(0, None)]) is True

    def test_duplicate_index_rejected(self, golden_ps):
        assert validate_pmi(golden_ps, [(0, None), (0, None)]) is False

    def test_out_of_range_index_rejected(self, golden_ps):
        assert validate_pmi(golden_ps, [(99, None)]) is False

    def test_non_dominating_order_rejected(self, golden_ps):
        pts = [(1, 3), (0, 3)]  # (1,3) beats (0,3) in no coordinate
        assert validate_pmi(golden_ps, seq_for(golden_ps, pts)) is False


class TestMinSets:
    def test_full_set_minima(self, golden_ps):
        sets = min_sets(golden_ps)
        assert [golden_ps.points[k] for k in sets[0]] == [(0, 3)]
        assert [golden_ps.points[k] for k in sets[1]] == [(3, 0)]

    def test_single_live_point_in_every_coordinate(self, golden_ps):
        k = golden_ps.index_of((2, 2))
        sets = min_sets(golden_ps, live=[k])
        assert sets == [[k], [k]]

    def test_conflict5_part_sizes(self, conflict5_ps):
        sets = min_sets(conflict5_ps)
        assert sorted(len(s) for s in sets) == [2, 3]

    def test_empty_live_rejected(self, golden_ps):
        with pytest.raises(BadParams):
            min_sets(golden_ps, live=[])


class TestConflicts:
    def test_no_conflict_on_worked_set(self, golden_ps):
        assert detect_conflict(golden_ps) is None

    def test_no_conflict_on_antichain_pair(self):
        ps = DlvPointSet.from_points([(0, 1), (1, 0)])
        assert detect_conflict(ps) is None

    def test_conflict5_detected(self, conflict5_ps):
        cp = detect_conflict(conflict5_ps)
        assert cp is not None
        assert sorted(len(p) for p in cp.parts) == [2, 3]
        assert cp.min_part_size() == 2
        assert len(cp.union()) == 5

    def test_inclusion_bound_worked_conflict(self, conflict5_ps):
        cp = detect_conflict(conflict5_ps)
        assert conflict_inclusion_bound(cp) == 4
        # the bound is attained on this set
        assert brute_force_pmi(conflict5_ps) == 4

    def test_inclusion_bound_small_cases(self):
        ps = DlvPointSet.from_points([(0, 1), (0, 2), (1, 0), (2, 0)])
        cp = detect_conflict(ps)
        assert conflict_inclusion_bound(cp) == 3

        six = [(0, 3), (0, 4), (0, 5), (3, 0), (4, 0), (5, 0)]
        ps6 = DlvPointSet.from_points(six)
        cp6 = detect_conflict(ps6)
        assert conflict_inclusion_bound(cp6) == 4
        assert brute_force_pmi(ps6) == 4

    def test_bound_rejects_undersized_parts(self):
        with pytest.raises(BadParams):
            conflict_inclusion_bound(CPartition(((0,), (1, 2))))

    def test_conflict5_from_shared_fixture_matches_module_doc(self):
        ps = DlvPointSet.from_points(CONFLICT5)
        assert detect_conflict(ps) is not None

    def test_bound_dominates_brute_force_on_random_conflicts(self):
        rng = make_rng(47)
        found = 0
        while found < 40:
            ps = random_point_set(rng, n_points_max=8, m_max=3)
            cp = detect_conflict(ps)
            if cp is None:
                continue
            found += 1
            union_points = [ps.points[k] for k in sorted(cp.union())]
            assert brute_force_pmi(union_points) <= conflict_inclusion_bound(cp)
