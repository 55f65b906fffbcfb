from __future__ import annotations

from collections import deque

import numpy as np
import pytest
from hypothesis import given

from conftest import connected_graphs, graphs
from coronakit import (
    EdgeListError,
    Graph,
    PreconditionError,
    adjacency_matrix,
    complete_graph,
    corona_edge,
    corona_vertex,
    cycle_graph,
    degree_matrix,
    format_edge_list,
    incidence_matrix,
    is_connected,
    is_regular,
    laplacian,
    line_graph,
    parse_edge_list,
    path_graph,
    star_graph,
    subdivision,
)


def two_colorable(g: Graph) -> bool:
    color = [-1] * g.vertex_count
    adj = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for start in range(g.vertex_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


class TestGraph:
    def test_canonical_edge_order(self):
        g = Graph(3, ((2, 0), (1, 0)))
        assert g.edges == ((0, 1), (0, 2))

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(2, ((1, 1),))

    def test_rejects_duplicate_even_reversed(self):
        with pytest.raises(ValueError):
            Graph(3, ((0, 1), (1, 0)))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 2),))

    def test_rejects_negative_vertex_count(self):
        with pytest.raises(ValueError):
            Graph(-1)

    def test_degrees_and_neighbors(self):
        g = path_graph(3)
        assert list(g.degrees()) == [1, 2, 1]
        assert g.neighbors(1) == (0, 2)
        with pytest.raises(IndexError):
            g.neighbors(3)

    def test_factories(self):
        assert complete_graph(4).edge_count == 6
        assert path_graph(5).edge_count == 4
        assert cycle_graph(4).edge_count == 4
        assert star_graph(3).edges == ((0, 1), (0, 2), (0, 3))
        with pytest.raises(ValueError):
            cycle_graph(2)


class TestMatrices:
    def test_path_matrices(self):
        g = path_graph(3)
        assert np.array_equal(adjacency_matrix(g), [[0, 1, 0], [1, 0, 1], [0, 1, 0]])
        assert np.array_equal(degree_matrix(g), np.diag([1.0, 2.0, 1.0]))
        assert np.array_equal(laplacian(g), [[1, -1, 0], [-1, 2, -1], [0, -1, 1]])

    def test_incidence_columns(self):
        g = path_graph(3)
        assert np.array_equal(incidence_matrix(g), [[1, 0], [1, 1], [0, 1]])

    @given(graphs())
    def test_laplacian_rows_sum_to_zero(self, g):
        assert np.abs(laplacian(g).sum(axis=1)).max(initial=0.0) == 0.0

    @given(graphs())
    def test_incidence_identity(self, g):
        # R R^T = D + A for the unsigned incidence matrix
        r = incidence_matrix(g)
        assert np.array_equal(r @ r.T, degree_matrix(g) + adjacency_matrix(g))

    @given(graphs())
    def test_line_graph_identity(self, g):
        # R^T R = A(line graph) + 2I
        r = incidence_matrix(g)
        expect = adjacency_matrix(line_graph(g)) + 2.0 * np.eye(g.edge_count)
        assert np.array_equal(r.T @ r, expect)


class TestDerivedGraphs:
    def test_subdivision_of_triangle_is_hexagon(self):
        s = subdivision(complete_graph(3))
        assert s.vertex_count == 6 and s.edge_count == 6
        assert list(s.degrees()) == [2] * 6
        assert is_connected(s) and two_colorable(s)

    @given(graphs())
    def test_subdivision_counts_and_bipartite(self, g):
        s = subdivision(g)
        assert s.vertex_count == g.vertex_count + g.edge_count
        assert s.edge_count == 2 * g.edge_count
        assert two_colorable(s)

    def test_line_graph_examples(self):
        assert line_graph(path_graph(4)).edges == ((0, 1), (1, 2))
        assert line_graph(complete_graph(3)).edge_count == 3
        assert line_graph(star_graph(3)).edge_count == 3


class TestPredicates:
    def test_is_connected(self):
        assert is_connected(Graph(0))
        assert is_connected(Graph(1))
        assert is_connected(path_graph(4))
        assert not is_connected(Graph(2))
        assert not is_connected(Graph(4, ((0, 1), (2, 3))))

    def test_is_regular(self):
        assert is_regular(cycle_graph(4)) == 2
        assert is_regular(path_graph(3)) is None
        assert is_regular(Graph(1)) == 0
        assert is_regular(Graph(0)) is None


class TestCorona:
    def test_vertex_product_of_k1_k2_is_four_cycle(self):
        layout = corona_vertex(complete_graph(1), complete_graph(2))
        assert layout.product.edges == ((0, 1), (0, 2), (1, 3), (2, 3))
        assert [layout.classify(v)[0] for v in range(4)] == [
            "subdivision",
            "copy",
            "copy",
            "base",
        ]

    def test_vertex_product_of_k2_k1_is_path(self):
        layout = corona_vertex(complete_graph(2), complete_graph(1))
        # pendant copy vertex per base vertex: path cop0 - base0 - base1 - cop1
        assert layout.product.edges == ((0, 2), (1, 3), (2, 3))
        assert is_connected(layout.product)
        assert sorted(layout.product.degrees()) == [1, 1, 2, 2]

    def test_edge_product_of_k1_k2_is_star(self):
        layout = corona_edge(complete_graph(1), complete_graph(2))
        assert layout.product.edges == ((0, 1), (0, 2), (0, 3))
        assert layout.classify(0) == ("subdivision", 0, 0)

    def test_empty_first_factor_rejected(self):
        with pytest.raises(PreconditionError):
            corona_vertex(Graph(0), complete_graph(2))
        with pytest.raises(PreconditionError):
            corona_edge(Graph(0), complete_graph(2))

    @given(connected_graphs(max_vertices=4), graphs(max_vertices=4))
    def test_product_counts(self, g1, g2):
        n1, m1 = g1.vertex_count, g1.edge_count
        n2, m2 = g2.vertex_count, g2.edge_count
        lv = corona_vertex(g1, g2)
        le = corona_edge(g1, g2)
        assert lv.product.vertex_count == n1 * (1 + n2 + m2)
        assert le.product.vertex_count == n1 * (1 + n2 + m2)
        assert lv.product.edge_count == m1 + n1 * n2 + 2 * n1 * m2
        assert le.product.edge_count == m1 + 3 * n1 * m2

    @given(connected_graphs(max_vertices=4), graphs(max_vertices=4))
    def test_classify_inverts_index_maps(self, g1, g2):
        for layout in (corona_vertex(g1, g2), corona_edge(g1, g2)):
            for v in range(layout.product.vertex_count):
                coord = layout.classify(v)
                assert layout.global_index(coord) == v
            sub, cop, bas = layout.block_slices()
            assert sub.stop - sub.start == layout.n1 * layout.m2
            assert cop.stop - cop.start == layout.n1 * layout.n2
            assert bas.stop - bas.start == layout.n1

    def test_base_coordinate_owner_must_match(self):
        layout = corona_vertex(complete_graph(2), complete_graph(2))
        with pytest.raises(ValueError):
            layout.global_index(("base", 0, 1))

    @given(connected_graphs(max_vertices=3), graphs(max_vertices=3))
    def test_one_copy_restriction_matches_single_base_product(self, g1, g2):
        # the subgraph induced by one copy plus its owner is the product with
        # a one-vertex first factor, up to the explicit relabeling below
        single = corona_vertex(complete_graph(1), g2)
        big = corona_vertex(g1, g2)
        big_edges = set(big.product.edges)
        for owner in range(g1.vertex_count):
            def relabel(v):
                cls, local, _ = single.classify(v)
                if cls == "subdivision":
                    return big.subdivision_index(local, owner)
                if cls == "copy":
                    return big.copy_index(local, owner)
                return big.base_index(owner)

            image = {relabel(v) for v in range(single.product.vertex_count)}
            mapped = set()
            for u, v in single.product.edges:
                a, b = relabel(u), relabel(v)
                edge = (a, b) if a < b else (b, a)
                assert edge in big_edges
                mapped.add(edge)
            induced = {
                e for e in big_edges if e[0] in image and e[1] in image
            }
            assert induced == mapped


class TestEdgeListFormat:
    @given(graphs())
    def test_round_trip(self, g):
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blank_lines(self):
        text = "# a triangle\n\n3 3\n0 1  # first\n1 2\n\n0 2\n"
        assert parse_edge_list(text) == complete_graph(3)

    def test_missing_header(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("# nothing here\n")

    def test_non_integer_field_cites_line(self):
        with pytest.raises(EdgeListError, match="line 3"):
            parse_edge_list("3 2\n0 1\nx 2\n")

    def test_wrong_field_count_cites_line(self):
        with pytest.raises(EdgeListError, match="line 2"):
            parse_edge_list("2 1\n0 1 7\n")

    def test_too_many_edges_cites_line(self):
        with pytest.raises(EdgeListError, match="line 3"):
            parse_edge_list("3 1\n0 1\n1 2\n0 2\n")

    def test_too_few_edges(self):
        with pytest.raises(EdgeListError, match="declared 2"):
            parse_edge_list("3 2\n0 1\n")

    def test_out_of_range_cites_line(self):
        with pytest.raises(EdgeListError, match="line 2"):
            parse_edge_list("2 1\n0 5\n")

    def test_duplicate_cites_line(self):
        with pytest.raises(EdgeListError, match="line 3"):
            parse_edge_list("2 2\n0 1\n1 0\n")

    def test_self_loop_cites_line(self):
        with pytest.raises(EdgeListError, match="line 2"):
            parse_edge_list("2 1\n1 1\n")
