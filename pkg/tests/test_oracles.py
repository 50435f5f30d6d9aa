"""Brute-force oracles: independence, matchings, perfect matchings, EG sets."""

import random

import pytest

from nulldecomp import (
    Graph,
    Matching,
    NotATree,
    TooLarge,
    UnknownVertex,
    cycle_graph,
    eg_set,
    find_cycle,
    has_augmenting_path,
    has_perfect_matching,
    max_independent_set,
    max_matching,
    mismatched_in,
    pendant_trees,
    random_simple_graph,
    random_tree,
    size_limit,
)
from nulldecomp.fixtures import load_fixture

nx = pytest.importorskip("networkx")


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k):
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def brute_mis_size(g):
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best = 0
    for mask in range(1 << g.n):
        m = mask
        ok = True
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if adj[v] & mask:
                ok = False
                break
        if ok:
            best = max(best, mask.bit_count())
    return best


class TestMaxIndependentSet:
    def test_matches_exhaustive_enumeration(self):
        rng = random.Random(41)
        for _ in range(50):
            g = random_simple_graph(rng.randrange(1, 11), rng.choice([0.15, 0.35, 0.6]), rng)
            size, witness = max_independent_set(g)
            assert size == brute_mis_size(g)
            assert len(witness) == size
            assert not any(u in witness and v in witness for u, v in g.edges)

    def test_known_values(self):
        assert max_independent_set(load_fixture("fig1_T1"))[0] == 4
        assert max_independent_set(load_fixture("fig4"))[0] == 10
        assert max_independent_set(cycle_graph(7))[0] == 3
        assert max_independent_set(petersen())[0] == 4
        assert max_independent_set(Graph(3))[0] == 3

    def test_empty_graph(self):
        assert max_independent_set(Graph(0)) == (0, frozenset())


class TestMaxMatching:
    def test_matches_blossom_on_random_graphs(self):
        rng = random.Random(43)
        for _ in range(50):
            g = random_simple_graph(rng.randrange(1, 12), rng.choice([0.2, 0.4]), rng)
            got = max_matching(g)
            assert got.is_valid_for(g)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges)
            assert got.size == len(nx.max_weight_matching(h, maxcardinality=True))

    @pytest.mark.parametrize(
        "g,nu",
        [
            (cycle_graph(5), 2),
            (cycle_graph(7), 3),
            (cycle_graph(8), 4),
            (petersen(), 5),
            (star(4), 1),
            (path_graph(6), 3),
            (Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]), 2),
        ],
    )
    def test_known_values(self, g, nu):
        assert max_matching(g).size == nu

    def test_odd_cycle_with_pendants(self):
        # C5 plus a path of two hanging off each of two cycle vertices
        g = Graph(
            9,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (2, 7), (7, 8)],
        )
        assert max_matching(g).size == 4

    def test_saturated_vertices(self):
        m = max_matching(path_graph(4))
        assert m.saturated() == {0, 1, 2, 3}

    def test_matching_validity_helper(self):
        g = path_graph(3)
        assert Matching(frozenset({(0, 1)})).is_valid_for(g)
        assert not Matching(frozenset({(0, 2)})).is_valid_for(g)
        assert not Matching(frozenset({(0, 1), (1, 2)})).is_valid_for(g)


class TestAugmentingPaths:
    def test_detects_augmentable_matching(self):
        g = path_graph(4)
        assert has_augmenting_path(g, Matching(frozenset({(1, 2)})))
        assert not has_augmenting_path(g, Matching(frozenset({(0, 1), (2, 3)})))

    def test_empty_matching_on_edgeless_graph(self):
        assert not has_augmenting_path(Graph(3), Matching(frozenset()))


class TestHasPerfectMatching:
    @pytest.mark.parametrize(
        "g,expected",
        [
            (Graph(0), True),
            (Graph(1), False),
            (path_graph(2), True),
            (path_graph(3), False),
            (path_graph(4), True),
            (star(3), False),
            (Graph(4, [(0, 1), (2, 3)]), True),
            (Graph(3, [(0, 1)]), False),
        ],
    )
    def test_known_cases(self, g, expected):
        assert has_perfect_matching(g) == expected

    def test_agrees_with_matching_size_on_random_forests(self):
        rng = random.Random(47)
        for _ in range(60):
            t = random_tree(rng.randrange(1, 15), rng)
            assert has_perfect_matching(t) == (2 * max_matching(t).size == t.n)

    def test_rejects_cycles(self):
        from nulldecomp import NotAForest

        with pytest.raises(NotAForest):
            has_perfect_matching(cycle_graph(4))


class TestEgSet:
    def test_known_values(self):
        assert eg_set(load_fixture("fig1_T1")) == {1, 2, 3}
        assert eg_set(path_graph(3)) == {0, 2}
        assert eg_set(path_graph(2)) == frozenset()
        assert eg_set(Graph(1)) == {0}

    def test_odd_cycle_every_vertex_missable(self):
        assert eg_set(cycle_graph(5)) == frozenset(range(5))


class TestMismatchedIn:
    def test_path_endpoints(self):
        t = path_graph(3)
        assert mismatched_in(t, 0) and mismatched_in(t, 2)
        assert not mismatched_in(t, 1)

    def test_single_vertex(self):
        assert mismatched_in(Graph(1), 0)

    def test_pendant_tree_root_from_example(self):
        g = load_fixture("fig2_H")
        v5 = next(v for v in range(g.n) if g.name_of(v) == "v5")
        pt = next(
            p for p in pendant_trees(g, find_cycle(g)) if p.root == v5
        )
        assert mismatched_in(pt.tree, pt.root_local)

    def test_input_validation(self):
        with pytest.raises(NotATree):
            mismatched_in(cycle_graph(3), 0)
        with pytest.raises(NotATree):
            mismatched_in(Graph(2), 0)  # disconnected
        with pytest.raises(UnknownVertex):
            mismatched_in(path_graph(2), 5)


class TestSizeGuard:
    def test_default_limit(self, monkeypatch):
        monkeypatch.delenv("NULLDECOMP_MAX_N", raising=False)
        assert size_limit() == 32
        with pytest.raises(TooLarge):
            max_independent_set(path_graph(33))
        with pytest.raises(TooLarge):
            max_matching(path_graph(33))
        with pytest.raises(TooLarge):
            eg_set(path_graph(33))

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("NULLDECOMP_MAX_N", "40")
        assert size_limit() == 40
        assert max_matching(path_graph(33)).size == 16
