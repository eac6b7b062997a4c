from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodetic import (
    GraphError,
    all_pairs_distances,
    bfs_distances,
    complete_graph,
    cycle_graph,
    diameter,
    format_edge_list,
    from_edge_list,
    is_connected,
    parse_edge_list,
    path_graph,
    petersen_graph,
)

edge_pairs = st.tuples(st.integers(0, 11), st.integers(0, 11)).filter(lambda e: e[0] != e[1])
edge_lists = st.lists(edge_pairs, max_size=26)


class TestFromEdgeList:
    def test_triangle(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 0)])
        assert (g.vertex_count, g.edge_count) == (3, 3)
        assert g.has_edge(2, 0) and g.has_edge(0, 2)

    def test_empty(self):
        g = from_edge_list([])
        assert (g.vertex_count, g.edge_count) == (0, 0)

    def test_duplicates_collapse(self):
        g = from_edge_list([(0, 1), (0, 1), (1, 0), (1, 2)])
        assert g.edge_count == 2
        assert g.edges() == [(0, 1), (1, 2)]

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match=r"self-loop \(3, 3\)"):
            from_edge_list([(0, 1), (3, 3)])

    def test_negative_rejected(self):
        with pytest.raises(GraphError, match="negative"):
            from_edge_list([(-1, 2)])

    def test_explicit_vertex_count_allows_isolated(self):
        g = from_edge_list([(0, 1)], vertex_count=4)
        assert g.vertex_count == 4
        assert g.degree(3) == 0

    def test_vertex_count_below_max_endpoint_rejected(self):
        with pytest.raises(GraphError, match="vertex_count=2"):
            from_edge_list([(0, 5)], vertex_count=2)

    @given(edge_lists)
    def test_adjacency_invariants(self, edges):
        g = from_edge_list(edges)
        g.validate()
        assert g.edge_count == sum(g.degree(v) for v in g.vertices()) // 2


class TestEdgeListFormat:
    def test_comments_and_blanks_ignored(self):
        g = parse_edge_list("# a triangle\n\n0 1\n 1 2 \n# done\n2 0\n")
        assert (g.vertex_count, g.edge_count) == (3, 3)

    def test_bad_field_count_reports_line(self):
        with pytest.raises(GraphError, match="line 3"):
            parse_edge_list("0 1\n1 2\n2 3 4\n")

    def test_non_integer_reports_line(self):
        with pytest.raises(GraphError, match="line 2"):
            parse_edge_list("0 1\nx 2\n")

    def test_self_loop_reports_line(self):
        with pytest.raises(GraphError, match="line 1"):
            parse_edge_list("5 5\n")

    def test_negative_reports_line(self):
        with pytest.raises(GraphError, match="line 2: negative"):
            parse_edge_list("0 1\n-1 2\n")

    def test_header_lines_become_comments(self):
        text = format_edge_list(cycle_graph(4), header="four cycle\nsecond line")
        assert text.startswith("# four cycle\n# second line\n")
        assert parse_edge_list(text).edge_count == 4

    def test_petersen_round_trip(self):
        g = petersen_graph()
        assert parse_edge_list(format_edge_list(g)).adjacency == g.adjacency

    @given(edge_lists)
    def test_round_trip_random(self, edges):
        g = from_edge_list(edges)
        assert parse_edge_list(format_edge_list(g)).adjacency == g.adjacency


class TestBfsDistances:
    def test_cycle6(self):
        table = bfs_distances(cycle_graph(6), 0)
        assert table[3] == 3 and table[1] == 1 and table[5] == 1
        assert table[0] == 0

    def test_complete4(self):
        table = bfs_distances(complete_graph(4), 2)
        assert sorted(table.dist) == [0, 1, 1, 1]

    def test_petersen_levels(self):
        g = petersen_graph()
        for s in g.vertices():
            dist = bfs_distances(g, s).dist
            assert sorted(dist) == [0, 1, 1, 1, 2, 2, 2, 2, 2, 2]

    def test_source_out_of_range(self):
        with pytest.raises(GraphError, match="source 9"):
            bfs_distances(cycle_graph(4), 9)

    def test_unreachable_is_none(self):
        g = from_edge_list([(0, 1)], vertex_count=3)
        assert bfs_distances(g, 0).dist == (0, 1, None)

    @given(edge_lists)
    def test_edge_lipschitz_and_symmetry(self, edges):
        g = from_edge_list(edges)
        if g.vertex_count == 0:
            return
        tables = all_pairs_distances(g)
        for u, v in g.edges():
            assert tables[u][v] == 1
        for u in g.vertices():
            assert tables[u][u] == 0
            for v in g.vertices():
                assert tables[u][v] == tables[v][u]
                if tables[u][v] is not None:
                    for w in g.neighbors(v):
                        assert abs(tables[u][v] - tables[u][w]) <= 1


class TestConnectivityAndDiameter:
    def test_cycle_connected(self):
        assert is_connected(cycle_graph(6))

    def test_two_triangles_disconnected(self):
        g = from_edge_list([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not is_connected(g)

    def test_single_vertex_connected(self):
        assert is_connected(from_edge_list([], vertex_count=1))
        assert is_connected(from_edge_list([]))

    def test_diameter_even_cycle_is_half_length(self):
        for big_l in (2, 3, 4, 5):
            assert diameter(cycle_graph(2 * big_l)) == big_l

    def test_diameter_complete(self):
        assert diameter(complete_graph(5)) == 1

    def test_diameter_path(self):
        assert diameter(path_graph(5)) == 4

    def test_diameter_disconnected_rejected(self):
        g = from_edge_list([(0, 1), (2, 3)])
        with pytest.raises(GraphError, match="disconnected"):
            diameter(g)

    @settings(max_examples=40)
    @given(edge_lists)
    def test_triangle_inequality(self, edges):
        g = from_edge_list(edges)
        if g.vertex_count == 0 or not is_connected(g):
            return
        d = all_pairs_distances(g)
        for u in g.vertices():
            for v in g.vertices():
                for w in g.vertices():
                    assert d[u][w] <= d[u][v] + d[v][w]
