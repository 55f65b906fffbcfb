"""Closed-form {1}-inverses of corona-product Laplacians.

In the three-block vertex numbering (subdivision, copy, base) the product
Laplacian is a 3x3 block matrix of Kronecker lifts of small factor-graph
matrices.  A symmetric {1}-inverse is assembled directly from those small
pieces: the inverse of a shifted second-factor Laplacian, the group inverse
of the first factor's Laplacian, and two all-ones lifts.  The big product
matrix is never inverted here; that brute-force route lives in the metrics
module and serves as the independent oracle.

For the vertex product the shift is ``L2 + 2I``; for the edge product it is
``L2 + r2 I`` with ``r2`` the common degree of the (required regular)
second factor.  Writing ``Q`` for the shifted matrix, ``T`` for the lifted
top-left factor, ``S#`` for the first factor's group inverse and ``H, K``
for the all-ones lifts over edges and vertices of the second factor, the
assembled matrix is

    [[ T + H S# H^T,  coupling + H S# K^T,  H S#   ],
     [      ...    ,  c Q^-1 (x) I + K S# K^T,  K S#   ],
     [      ...    ,         ...           ,  S#     ]]

with ``c = 2`` (vertex) or ``3`` (edge) and coupling ``R2^T Q^-1 (x) I``;
the lower triangle mirrors the upper and the whole matrix is symmetrized
exactly, so ``N == N.T`` holds bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .graphs import (
    EDGE_KIND,
    VERTEX_KIND,
    CoronaLayout,
    Graph,
    corona_edge,
    corona_vertex,
    degree_matrix,
    incidence_matrix,
    is_connected,
    is_regular,
    laplacian,
)
from .linalg import DEFAULT_TOLERANCES, Tolerances, group_inverse_laplacian, inverse, kron


@dataclass(frozen=True, eq=False)
class OneInverse:
    """Assembled symmetric {1}-inverse with its building blocks retained.

    Attributes
    ----------
    kind : str
        Product kind, "vertex" or "edge".
    layout : CoronaLayout
        The product this matrix belongs to.
    matrix : ndarray
        Full symmetric {1}-inverse of the product Laplacian.
    t_block : ndarray
        Lifted top-left factor (subdivision block before the rank-one part).
    small_inverse : ndarray
        Inverse of the shifted second-factor Laplacian, n2 x n2.
    s_sharp : ndarray
        Group inverse of the first factor's Laplacian.
    h, k : ndarray
        All-ones Kronecker lifts over the second factor's edges / vertices.
    """

    kind: str
    layout: CoronaLayout
    matrix: np.ndarray
    t_block: np.ndarray
    small_inverse: np.ndarray
    s_sharp: np.ndarray
    h: np.ndarray
    k: np.ndarray


def _require_factors(g1: Graph, g2: Graph, kind: str) -> int:
    """Validate preconditions; return the second factor's degree for the edge kind."""
    if g1.vertex_count == 0:
        raise PreconditionError("corona product needs a nonempty first factor")
    if not is_connected(g1):
        raise PreconditionError("first factor must be connected")
    if kind == EDGE_KIND:
        r2 = is_regular(g2)
        if r2 is None:
            raise PreconditionError("edge product needs a regular second factor")
        if r2 < 1:
            raise PreconditionError("edge product needs second-factor degree at least 1")
        return r2
    return 0


def _assemble(g1: Graph, g2: Graph, kind: str, tol: Tolerances) -> OneInverse:
    r2 = _require_factors(g1, g2, kind)
    layout = corona_vertex(g1, g2) if kind == VERTEX_KIND else corona_edge(g1, g2)
    n1, n2, m2 = layout.n1, layout.n2, layout.m2
    eye1 = np.eye(n1)
    l2 = laplacian(g2)
    r2mat = incidence_matrix(g2)

    if kind == VERTEX_KIND:
        shifted = l2 + 2.0 * np.eye(n2)
        t_weight, mid_coeff = 0.5, 2.0
    else:
        shifted = l2 + float(r2) * np.eye(n2)
        t_weight, mid_coeff = 1.0 / 3.0, 3.0
    small_inverse = inverse(shifted, tol)
    small_inverse = 0.5 * (small_inverse + small_inverse.T)

    t_small = t_weight * (np.eye(m2) + r2mat.T @ small_inverse @ r2mat)
    t_small = 0.5 * (t_small + t_small.T)
    t_block = kron(t_small, eye1)

    s_sharp = group_inverse_laplacian(laplacian(g1), tol)
    h = kron(np.ones((m2, 1)), eye1)
    k = kron(np.ones((n2, 1)), eye1)

    n = layout.product.vertex_count
    sub, cop, bas = layout.block_slices()
    x = np.zeros((n, n))
    x[sub, sub] = t_block + h @ s_sharp @ h.T
    x[sub, cop] = kron(r2mat.T @ small_inverse, eye1) + h @ s_sharp @ k.T
    x[sub, bas] = h @ s_sharp
    x[cop, cop] = mid_coeff * kron(small_inverse, eye1) + k @ s_sharp @ k.T
    x[cop, bas] = k @ s_sharp
    x[bas, bas] = s_sharp
    x[cop, sub] = x[sub, cop].T
    x[bas, sub] = x[sub, bas].T
    x[bas, cop] = x[cop, bas].T
    x = 0.5 * (x + x.T)

    return OneInverse(
        kind=kind,
        layout=layout,
        matrix=x,
        t_block=t_block,
        small_inverse=small_inverse,
        s_sharp=s_sharp,
        h=h,
        k=k,
    )


def one_inverse_vertex_corona(
    g1: Graph, g2: Graph, tol: Tolerances = DEFAULT_TOLERANCES
) -> OneInverse:
    """Symmetric {1}-inverse of the vertex-product Laplacian.

    Requires ``g1`` nonempty and connected; ``g2`` may be any simple graph.
    """
    return _assemble(g1, g2, VERTEX_KIND, tol)


def one_inverse_edge_corona(
    g1: Graph, g2: Graph, tol: Tolerances = DEFAULT_TOLERANCES
) -> OneInverse:
    """Symmetric {1}-inverse of the edge-product Laplacian.

    Requires ``g1`` nonempty and connected and ``g2`` regular of degree at
    least 1 (otherwise the product is disconnected and the assembly does
    not apply).
    """
    return _assemble(g1, g2, EDGE_KIND, tol)


def laplacian_of_product(layout: CoronaLayout) -> np.ndarray:
    """Product Laplacian assembled block-wise from the factor matrices.

    Equals ``laplacian(layout.product)`` entrywise; the equality is the
    check that the three-block numbering matches the Kronecker structure.
    """
    g1, g2 = layout.g1, layout.g2
    n1, n2, m2 = layout.n1, layout.n2, layout.m2
    eye1 = np.eye(n1)
    d2 = degree_matrix(g2)
    r2mat = incidence_matrix(g2)
    l1 = laplacian(g1)

    n = layout.product.vertex_count
    sub, cop, bas = layout.block_slices()
    lap = np.zeros((n, n))
    lap[sub, cop] = kron(-r2mat.T, eye1)
    lap[cop, sub] = kron(-r2mat, eye1)
    if layout.kind == VERTEX_KIND:
        lap[sub, sub] = kron(2.0 * np.eye(m2), eye1)
        lap[cop, cop] = kron(d2 + np.eye(n2), eye1)
        lap[cop, bas] = kron(-np.ones((n2, 1)), eye1)
        lap[bas, cop] = kron(-np.ones((1, n2)), eye1)
        lap[bas, bas] = l1 + n2 * eye1
    else:
        lap[sub, sub] = kron(3.0 * np.eye(m2), eye1)
        lap[sub, bas] = kron(-np.ones((m2, 1)), eye1)
        lap[bas, sub] = kron(-np.ones((1, m2)), eye1)
        lap[cop, cop] = kron(d2, eye1)
        lap[bas, bas] = l1 + m2 * eye1
    return lap
