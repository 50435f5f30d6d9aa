"""Graph container, both parsers, shape classification, cycle location."""

import random

import pytest

from nulldecomp import (
    DuplicateEdge,
    EmptyGraph,
    Graph,
    MalformedLine,
    BadChecksumChar,
    NotUnicyclic,
    Role,
    SelfLoop,
    Shape,
    TruncatedPayload,
    UnknownVertex,
    classify_shape,
    connected_components,
    export_dot,
    find_cycle,
    format_edge_list,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    pendant_trees,
    random_simple_graph,
    random_unicyclic,
    remove_vertices,
    two_coloring,
)

nx = pytest.importorskip("networkx")


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestGraph:
    def test_basic_accessors(self):
        g = Graph(4, [(0, 1), (2, 1), (2, 3)])
        assert g.n == 4
        assert g.edges == {(0, 1), (1, 2), (2, 3)}
        assert g.neighbors(1) == {0, 2}
        assert g.degree(2) == 2
        assert g.has_edge(1, 0) and not g.has_edge(0, 3)

    def test_edges_normalized_to_sorted_pairs(self):
        g = Graph(3, [(2, 0)])
        assert g.edges == {(0, 2)}

    def test_rejects_bad_edges(self):
        with pytest.raises(UnknownVertex):
            Graph(2, [(0, 2)])
        with pytest.raises(SelfLoop):
            Graph(2, [(1, 1)])
        with pytest.raises(DuplicateEdge):
            Graph(2, [(0, 1), (1, 0)])

    def test_zero_vertices_allowed(self):
        g = Graph(0)
        assert g.n == 0 and g.edges == frozenset()

    def test_labels(self):
        g = Graph(2, [(0, 1)], labels=["a", "b"])
        assert g.name_of(0) == "a"
        assert Graph(1).name_of(0) == "0"
        with pytest.raises(ValueError):
            Graph(2, labels=["a"])

    def test_without_edge(self):
        g = cycle(4)
        t = g.without_edge(3, 0)
        assert classify_shape(t) == Shape.TREE
        with pytest.raises(UnknownVertex):
            g.without_edge(0, 2)

    def test_equality_and_hash(self):
        a = Graph(3, [(0, 1)])
        b = Graph(3, [(1, 0)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(3, [(0, 2)])


class TestEdgeListFormat:
    def test_parse_with_headers_and_comments(self):
        g = parse_edge_list("# a triangle plus tail\nn=4\nlabels=p,q,r,s\n0 1\n1 2\n2 0\n2 3\n")
        assert g.n == 4
        assert g.labels == ("p", "q", "r", "s")
        assert g.has_edge(2, 3)

    def test_vertex_count_defaults_to_max_plus_one(self):
        assert parse_edge_list("0 5\n").n == 6

    def test_edgeless_graph_via_header(self):
        g = parse_edge_list("n=4\n")
        assert g.n == 4 and not g.edges

    def test_errors_carry_line_numbers(self):
        with pytest.raises(MalformedLine, match="line 2"):
            parse_edge_list("0 1\n1 2 3\n")
        with pytest.raises(SelfLoop, match="line 1"):
            parse_edge_list("3 3\n")
        with pytest.raises(DuplicateEdge, match="line 3"):
            parse_edge_list("0 1\n1 2\n1 0\n")
        with pytest.raises(MalformedLine, match="non-integer"):
            parse_edge_list("0 x\n")
        with pytest.raises(MalformedLine, match="negative"):
            parse_edge_list("0 -1\n")

    def test_header_validation(self):
        with pytest.raises(MalformedLine):
            parse_edge_list("n=abc\n0 1\n")
        with pytest.raises(MalformedLine, match="out of range"):
            parse_edge_list("n=2\n0 5\n")
        with pytest.raises(MalformedLine, match="labels"):
            parse_edge_list("n=3\nlabels=a,b\n0 1\n")

    def test_round_trip(self):
        rng = random.Random(11)
        for _ in range(25):
            g = random_simple_graph(rng.randrange(1, 12), 0.3, rng)
            assert parse_edge_list(format_edge_list(g)) == g

    def test_round_trip_keeps_labels(self):
        g = Graph(3, [(0, 1)], labels=["x", "y", "z"])
        assert parse_edge_list(format_edge_list(g)) == g


class TestGraph6:
    def test_single_edge(self):
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges == {(0, 1)}

    def test_triangle(self):
        g = parse_graph6("Bw")
        assert g.n == 3 and g.edges == {(0, 1), (0, 2), (1, 2)}

    def test_complete_four(self):
        g = parse_graph6("C~")
        assert g.n == 4 and len(g.edges) == 6

    def test_header_prefix(self):
        assert parse_graph6(">>graph6<<Bw").n == 3

    def test_long_size_form(self):
        # 63 vertices, no edges: size header ~??~ then 326 zero bytes
        s = "~??~" + "?" * 326
        g = parse_graph6(s)
        assert g.n == 63 and not g.edges

    def test_bad_byte(self):
        with pytest.raises(BadChecksumChar):
            parse_graph6("B!")

    def test_truncated(self):
        with pytest.raises(TruncatedPayload):
            parse_graph6("B")
        with pytest.raises(TruncatedPayload):
            parse_graph6("")

    def test_trailing_garbage(self):
        with pytest.raises(MalformedLine, match="trailing"):
            parse_graph6("Bw?")

    def test_against_networkx_on_random_graphs(self):
        rng = random.Random(23)
        for _ in range(60):
            n = rng.randrange(1, 13)
            g = random_simple_graph(n, rng.choice([0.1, 0.3, 0.6]), rng)
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(g.edges)
            line = nx.to_graph6_bytes(h, header=False).decode().strip()
            assert parse_graph6(line) == Graph(n, g.edges)


class TestShapesAndComponents:
    @pytest.mark.parametrize(
        "g,shape",
        [
            (Graph(1), Shape.TREE),
            (path_graph(5), Shape.TREE),
            (Graph(3, [(0, 1)]), Shape.FOREST),
            (cycle(4), Shape.CYCLE),
            (Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), Shape.UNICYCLIC),
            (Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)]), Shape.OTHER),
            (Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]), Shape.OTHER),
        ],
    )
    def test_classify(self, g, shape):
        assert classify_shape(g) == shape

    def test_classify_empty_raises(self):
        with pytest.raises(EmptyGraph):
            classify_shape(Graph(0))

    def test_components_ordered_by_smallest_member(self):
        g = Graph(6, [(4, 5), (0, 3), (1, 2)])
        comps = connected_components(g)
        assert [m[0] for _, m in comps] == [0, 1, 4]
        sub, label_map = comps[0]
        assert sub.n == 2 and label_map == (0, 3)

    def test_induced_subgraph_relabels_densely(self):
        g = path_graph(5)
        sub, label_map = induced_subgraph(g, [1, 3, 2])
        assert label_map == (1, 2, 3)
        assert sub.edges == {(0, 1), (1, 2)}
        with pytest.raises(UnknownVertex):
            induced_subgraph(g, [9])

    def test_remove_vertices(self):
        g = cycle(5)
        sub, label_map = remove_vertices(g, {0})
        assert classify_shape(sub) == Shape.TREE
        assert label_map == (1, 2, 3, 4)
        empty, _ = remove_vertices(g, range(5))
        assert empty.n == 0

    def test_two_coloring(self):
        colors = two_coloring(path_graph(4))
        assert all(colors[u] != colors[v] for u, v in path_graph(4).edges)
        assert two_coloring(cycle(5)) is None
        assert two_coloring(cycle(6)) is not None


class TestFindCycle:
    def test_pure_cycle(self):
        info = find_cycle(cycle(5))
        assert info.vertices == (0, 1, 2, 3, 4)
        assert info.length == 5

    def test_canonical_start_and_direction(self):
        # cycle 2-4-6-3 with trees hanging off; smallest cycle vertex is 2,
        # and of its cycle neighbors {3, 4} the tour steps to 3 first
        g = Graph(
            8,
            [(2, 4), (4, 6), (6, 3), (3, 2), (0, 2), (1, 4), (5, 6), (7, 5)],
        )
        info = find_cycle(g)
        assert info.vertices == (2, 3, 6, 4)

    def test_rejects_acyclic_and_bicyclic(self):
        with pytest.raises(NotUnicyclic):
            find_cycle(path_graph(4))
        with pytest.raises(NotUnicyclic):
            find_cycle(Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)]))

    def test_relabeling_keeps_the_same_cycle_set(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randrange(4, 12)
            g = random_unicyclic(n, rng)
            base = find_cycle(g)
            perm = list(range(n))
            rng.shuffle(perm)
            h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges])
            relabeled = find_cycle(h)
            assert set(relabeled.vertices) == {perm[v] for v in base.vertices}
            assert relabeled.vertices[0] == min(relabeled.vertices)
            second = relabeled.vertices[1]
            last = relabeled.vertices[-1]
            assert second == min(second, last)


class TestPendantTrees:
    def test_partition_and_roots(self):
        g = Graph(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (1, 5), (2, 6)])
        info = find_cycle(g)
        pts = pendant_trees(g, info)
        assert [pt.root for pt in pts] == list(info.vertices)
        union = set()
        total = 0
        for pt in pts:
            assert pt.label_map[pt.root_local] == pt.root
            union |= pt.vertex_set()
            total += pt.tree.n
        assert union == set(range(7)) and total == 7

    def test_single_vertex_pendants_on_pure_cycle(self):
        pts = pendant_trees(cycle(4), find_cycle(cycle(4)))
        assert all(pt.tree.n == 1 for pt in pts)


class TestDotExport:
    def test_roles_and_escaping(self):
        g = Graph(3, [(0, 1), (1, 2)], labels=['say "hi"', "b", "c"])
        out = export_dot(g, {0: Role.SUPPORT, 1: Role.CORE, 2: Role.N_VERTEX})
        assert "shape=box" in out and "shape=doublecircle" in out and "shape=star" in out
        assert '\\"hi\\"' in out
        assert "0 -- 1;" in out and "1 -- 2;" in out

    def test_plain_default(self):
        out = export_dot(Graph(2, [(0, 1)]))
        assert "shape=box" not in out
        assert out.startswith("graph nulldecomp {")
