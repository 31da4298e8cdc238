"""Graph construction, generators, traversals, and edge-list I/O."""

from __future__ import annotations

import pytest

from sscbound import (
    BadParams,
    Disconnected,
    DisconnectedAfterRetries,
    InvalidEdge,
    LeaderSet,
    TooSmall,
    bfs_distances,
    connected_components,
    derive_seed,
    diameter,
    format_edge_list,
    gen_barabasi_albert,
    gen_cycle,
    gen_erdos_renyi,
    gen_path,
    is_connected,
    make_rng,
    new_graph,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from conftest import GOLDEN_EDGES, random_connected_instance


class TestNewGraph:
    def test_two_node_edge(self):
        g = new_graph(2, [(0, 1)])
        assert g.n == 2
        assert g.adj == ((1,), (0,))
        assert g.edge_count == 1
        assert g.has_edge(0, 1) and g.has_edge(1, 0)

    def test_golden_graph_adjacency(self):
        g = new_graph(6, GOLDEN_EDGES)
        assert g.adj[0] == (1, 2)
        assert g.adj[4] == (2, 3, 5)
        assert g.degree(4) == 3
        assert g.edge_count == 6
        assert sorted(g.edges()) == sorted(GOLDEN_EDGES)

    def test_duplicate_edges_collapse(self):
        g = new_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.adj[0] == (1,)
        assert g.edge_count == 1

    def test_rejects_self_loop(self):
        with pytest.raises(InvalidEdge):
            new_graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidEdge):
            new_graph(3, [(0, 3)])
        with pytest.raises(InvalidEdge):
            new_graph(3, [(-1, 2)])


class TestLeaderSet:
    def test_order_preserved_and_bad_inputs_rejected(self):
        # order matters: coordinate j of every distance vector is leaders[j]
        ls = LeaderSet.of((5, 0))
        assert tuple(ls) == (5, 0)
        with pytest.raises(BadParams):
            LeaderSet.of((1, 1))
        with pytest.raises(BadParams):
            LeaderSet.of(())

    def test_validate_for(self):
        ls = LeaderSet.of((0, 5))
        ls.validate_for(6)
        with pytest.raises(BadParams):
            ls.validate_for(5)


class TestGenerators:
    def test_path_and_cycle_smallest(self):
        p = gen_path(2)
        assert sorted(p.edges()) == [(0, 1)]
        c = gen_cycle(3)
        assert sorted(c.edges()) == [(0, 1), (0, 2), (1, 2)]
        with pytest.raises(TooSmall):
            gen_path(1)
        with pytest.raises(TooSmall):
            gen_cycle(2)

    def test_path6_diameter(self):
        assert diameter(gen_path(6)) == 5

    def test_er_extreme_probabilities(self):
        full = gen_erdos_renyi(5, 1.0, seed=0)
        assert full.edge_count == 10
        empty = gen_erdos_renyi(5, 0.0, seed=0)
        assert empty.edge_count == 0

    def test_er_connected_retry_failure(self):
        with pytest.raises(DisconnectedAfterRetries):
            gen_erdos_renyi(4, 0.0, seed=0, connected=True)

    def test_er_determinism(self):
        a = gen_erdos_renyi(200, 0.075, seed=42, connected=True)
        b = gen_erdos_renyi(200, 0.075, seed=42, connected=True)
        assert a.adj == b.adj
        c = gen_erdos_renyi(200, 0.075, seed=43, connected=True)
        assert c.adj != a.adj

    def test_er_param_validation(self):
        with pytest.raises(BadParams):
            gen_erdos_renyi(5, 1.5, seed=0)
        with pytest.raises(BadParams):
            gen_erdos_renyi(0, 0.5, seed=0)

    def test_ba_smallest(self):
        g = gen_barabasi_albert(3, 1, seed=0)
        assert g.edge_count == 2
        assert is_connected(g)

    def test_ba_edge_count_formula(self):
        n, m = 20, 3
        g = gen_barabasi_albert(n, m, seed=7)
        assert g.edge_count == m * (n - m - 1) + m

    def test_ba_determinism(self):
        a = gen_barabasi_albert(30, 2, seed=11)
        b = gen_barabasi_albert(30, 2, seed=11)
        assert a.adj == b.adj

    def test_ba_param_validation(self):
        with pytest.raises(TooSmall):
            gen_barabasi_albert(3, 3, seed=0)
        with pytest.raises(BadParams):
            gen_barabasi_albert(3, 0, seed=0)

    def test_ba_connected_and_simple_sample(self):
        rng = make_rng(5)
        for _ in range(100):
            n = int(rng.integers(4, 25))
            m = int(rng.integers(1, min(4, n - 1) + 1))
            g = gen_barabasi_albert(n, m, seed=rng)
            assert is_connected(g)
            for v in range(g.n):
                assert len(set(g.adj[v])) == len(g.adj[v])
                assert v not in g.adj[v]

    def test_generators_pure_under_seed(self):
        for fam in ("er", "ba"):
            for seed in (0, 1, 99):
                if fam == "er":
                    a = gen_erdos_renyi(40, 0.2, seed=seed)
                    b = gen_erdos_renyi(40, 0.2, seed=seed)
                else:
                    a = gen_barabasi_albert(40, 2, seed=seed)
                    b = gen_barabasi_albert(40, 2, seed=seed)
                assert a.adj == b.adj


class TestTraversal:
    def test_bfs_golden_graph(self):
        g = new_graph(6, GOLDEN_EDGES)
        assert bfs_distances(g, 0) == [0, 1, 1, 2, 2, 3]
        assert bfs_distances(g, 5) == [3, 3, 2, 2, 1, 0]

    def test_bfs_path(self):
        assert bfs_distances(gen_path(4), 0) == [0, 1, 2, 3]

    def test_bfs_unreachable_none(self):
        g = new_graph(4, [(0, 1), (2, 3)])
        d = bfs_distances(g, 0)
        assert d[:2] == [0, 1] and d[2] is None and d[3] is None

    def test_bfs_neighbor_step_property(self):
        rng = make_rng(17)
        for _ in range(30):
            g, _ = random_connected_instance(rng, n_max=12)
            d = bfs_distances(g, 0)
            for u, v in g.edges():
                assert abs(d[u] - d[v]) <= 1

    def test_components_examples(self):
        p6 = gen_path(6)
        assert connected_components(p6, removed=(2, 3)) == [[0, 1], [4, 5]]
        assert connected_components(p6, removed=(1, 4)) == [[0], [2, 3], [5]]
        c6 = gen_cycle(6)
        assert connected_components(c6, removed=(0, 1)) == [[2, 3, 4, 5]]

    def test_components_partition_everything(self):
        rng = make_rng(23)
        for _ in range(30):
            g, _ = random_connected_instance(rng, n_max=12)
            k = int(rng.integers(0, g.n))
            removed = tuple(
                int(x) for x in rng.choice(g.n, size=k, replace=False)
            )
            comps = connected_components(g, removed=removed)
            seen = [v for comp in comps for v in comp]
            assert sorted(seen + list(removed)) == list(range(g.n))

    def test_diameter_examples(self):
        assert diameter(gen_cycle(6)) == 3
        assert diameter(gen_path(6)) == 5
        k4 = new_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        assert diameter(k4) == 1

    def test_diameter_disconnected(self):
        with pytest.raises(Disconnected):
            diameter(new_graph(4, [(0, 1), (2, 3)]))


class TestEdgeListIO:
    def test_roundtrip(self, tmp_path):
        g = new_graph(6, GOLDEN_EDGES)
        path = str(tmp_path / "g.edges")
        write_edge_list(g, path)
        h = read_edge_list(path)
        assert h.adj == g.adj

    def test_format_contains_header_and_edges(self):
        text = format_edge_list(new_graph(2, [(0, 1)]))
        lines = [ln for ln in text.splitlines() if ln.strip()]
        assert lines[0].split() == ["2", "1"]
        assert lines[1].split() == ["0", "1"]

    def test_parse_ignores_comments_and_blanks(self):
        g = parse_edge_list("# comment\n3 2\n\n0 1\n# mid\n1 2\n")
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_edge_list("nonsense\n0 1\n")
        with pytest.raises(ValueError, match="line 3"):
            parse_edge_list("2 1\n0 1\n0 x\n")
        with pytest.raises(ValueError):
            parse_edge_list("2 2\n0 1\n")  # fewer edges than promised
        with pytest.raises(InvalidEdge):
            parse_edge_list("2 1\n0 2\n")


class TestSeeds:
    def test_derive_seed_deterministic_and_distinct(self):
        assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)
        seen = {derive_seed(a, b) for a in range(10) for b in range(10)}
        assert len(seen) == 100

    def test_make_rng_passthrough(self):
        rng = make_rng(0)
        assert make_rng(rng) is rng
