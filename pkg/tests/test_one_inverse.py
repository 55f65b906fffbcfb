from __future__ import annotations

import numpy as np
import pytest

from coronakit import (
    Graph,
    PreconditionError,
    corona_edge,
    corona_vertex,
    complete_graph,
    incidence_matrix,
    is_regular,
    laplacian,
    laplacian_of_product,
    named_graph,
    one_inverse_edge_corona,
    one_inverse_vertex_corona,
    path_graph,
)
from coronakit.verify import CORPUS_G1, CORPUS_G2


def corpus_pairs():
    for a in CORPUS_G1:
        for b in CORPUS_G2:
            yield a, b, named_graph(a), named_graph(b)


def edge_admissible(g2):
    r2 = is_regular(g2)
    return r2 is not None and r2 >= 1


@pytest.mark.parametrize("a,b", [(a, b) for a in CORPUS_G1 for b in CORPUS_G2])
def test_defining_identity_on_corpus(a, b):
    g1, g2 = named_graph(a), named_graph(b)
    assemblies = [one_inverse_vertex_corona(g1, g2)]
    if edge_admissible(g2):
        assemblies.append(one_inverse_edge_corona(g1, g2))
    for oi in assemblies:
        lap = laplacian(oi.layout.product)
        assert np.abs(lap @ oi.matrix @ lap - lap).max() < 1e-8


def test_matrix_is_exactly_symmetric():
    for _, _, g1, g2 in corpus_pairs():
        oi = one_inverse_vertex_corona(g1, g2)
        assert np.array_equal(oi.matrix, oi.matrix.T)
        if edge_admissible(g2):
            oi = one_inverse_edge_corona(g1, g2)
            assert np.array_equal(oi.matrix, oi.matrix.T)


def test_block_laplacian_matches_graph_laplacian_exactly():
    # holds for every layout, including edge products of irregular factors
    for _, _, g1, g2 in corpus_pairs():
        for layout in (corona_vertex(g1, g2), corona_edge(g1, g2)):
            assert np.array_equal(laplacian_of_product(layout), laplacian(layout.product))


def test_block_shapes():
    g1, g2 = named_graph("P3"), named_graph("C4")
    oi = one_inverse_vertex_corona(g1, g2)
    n1, n2, m2 = 3, 4, 4
    assert oi.small_inverse.shape == (n2, n2)
    assert oi.s_sharp.shape == (n1, n1)
    assert oi.h.shape == (n1 * m2, n1)
    assert oi.k.shape == (n1 * n2, n1)
    assert oi.t_block.shape == (n1 * m2, n1 * m2)
    assert oi.matrix.shape == (n1 * (1 + n2 + m2),) * 2


def test_shifted_inverse_ones_vector_identities():
    # (L2 + 2I)^-1 1 = 1/2 and R2^T (L2 + 2I)^-1 1 = 1, used implicitly by
    # the closed Kirchhoff expressions
    for b in CORPUS_G2:
        g2 = named_graph(b)
        oi = one_inverse_vertex_corona(complete_graph(2), g2)
        ones = np.ones(g2.vertex_count)
        assert np.allclose(2.0 * oi.small_inverse @ ones, ones, atol=1e-12)
        r2 = incidence_matrix(g2)
        lifted = r2.T @ oi.small_inverse @ ones
        assert np.allclose(lifted, np.ones(g2.edge_count), atol=1e-12)


def test_edge_top_block_fixes_all_ones_lift():
    # T H = H for the edge assembly of a regular second factor
    for b in CORPUS_G2:
        g2 = named_graph(b)
        if not edge_admissible(g2):
            continue
        oi = one_inverse_edge_corona(named_graph("P3"), g2)
        assert np.allclose(oi.t_block @ oi.h, oi.h, atol=1e-12)


def test_schur_complement_of_base_block_is_first_factor_laplacian():
    # eliminating subdivision and copy rows of the product Laplacian leaves
    # exactly L(G1); this is why the corner block of the inverse is its
    # group inverse
    for a, b in (("K2", "C3"), ("P3", "K2"), ("S3", "C4"), ("K3", "K3")):
        g1, g2 = named_graph(a), named_graph(b)
        for layout in (
            corona_vertex(g1, g2),
            corona_edge(g1, g2) if edge_admissible(g2) else None,
        ):
            if layout is None:
                continue
            lap = laplacian(layout.product)
            p = layout.subdivision_count + layout.copy_count
            l1 = lap[:p, :p]
            l2 = lap[:p, p:]
            l3 = lap[p:, p:]
            schur = l3 - l2.T @ np.linalg.solve(l1, l2)
            assert np.allclose(schur, laplacian(g1), atol=1e-10)


class TestPreconditions:
    def test_empty_first_factor(self):
        with pytest.raises(PreconditionError):
            one_inverse_vertex_corona(Graph(0), complete_graph(2))

    def test_disconnected_first_factor(self):
        with pytest.raises(PreconditionError):
            one_inverse_vertex_corona(Graph(2), complete_graph(2))

    def test_edge_needs_regular_second_factor(self):
        with pytest.raises(PreconditionError):
            one_inverse_edge_corona(complete_graph(2), path_graph(3))

    def test_edge_rejects_degree_zero(self):
        with pytest.raises(PreconditionError):
            one_inverse_edge_corona(complete_graph(2), complete_graph(1))

    def test_vertex_allows_any_second_factor(self):
        oi = one_inverse_vertex_corona(complete_graph(2), Graph(3))
        lap = laplacian(oi.layout.product)
        assert np.abs(lap @ oi.matrix @ lap - lap).max() < 1e-10
