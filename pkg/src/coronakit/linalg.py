"""Dense symmetric matrix kit for Laplacian algebra.

Thin contract-checked wrappers over NumPy and SciPy primitives, plus the
two specialized inverses everything else is built from: the group inverse
of a connected graph's Laplacian and a symmetric {1}-inverse of a 2x2
symmetric block matrix through its Schur complement.

Matrices are float64 ndarrays throughout; functions are pure and never
mutate their inputs.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import PreconditionError, SingularMatrixError


@dataclass(frozen=True)
class Tolerances:
    """Shared numerical thresholds.

    Attributes
    ----------
    entry : float
        Scale for pivot and spectral-rank cutoffs and for per-entry
        agreement of two routes to the same quantity.
    residual : float
        Acceptable magnitude for defining-identity residuals such as
        ``|M X M - M|``.
    symmetry : float
        Largest absolute asymmetry accepted before a nominally symmetric
        input is rejected.
    """

    entry: float = 1e-9
    residual: float = 1e-8
    symmetry: float = 1e-12

    def __post_init__(self) -> None:
        if min(self.entry, self.residual, self.symmetry) <= 0.0:
            raise ValueError("tolerances must be positive")


DEFAULT_TOLERANCES = Tolerances()


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return m


def require_symmetric(a, tol: Tolerances = DEFAULT_TOLERANCES, what: str = "matrix") -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"{what} must be square, got shape {m.shape}")
    if m.size and float(np.abs(m - m.T).max()) > tol.symmetry:
        raise ValueError(f"{what} is not symmetric to within {tol.symmetry}")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product; (p x q) and (r x s) give (p r x q s)."""
    return np.kron(as_matrix(a), as_matrix(b))


def _lu_with_pivot_check(a: np.ndarray, tol: Tolerances, what: str):
    # partial-pivoted LU; a pivot below entry-tolerance scale means singular
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a)
    diag = np.abs(np.diag(lu))
    bound = tol.entry * max(1.0, float(diag.max(initial=0.0)))
    if diag.size and float(diag.min()) <= bound:
        raise SingularMatrixError(f"{what} is singular to working tolerance")
    return lu, piv


def inverse(a, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Inverse of a nonsingular square matrix.

    Raises ``SingularMatrixError`` when a pivot falls below the
    entry-tolerance scale during elimination.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"cannot invert non-square shape {m.shape}")
    n = m.shape[0]
    if n == 0:
        return np.zeros((0, 0))
    lu, piv = _lu_with_pivot_check(m, tol, "matrix")
    return scipy.linalg.lu_solve((lu, piv), np.eye(n))


def solve(a, b, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Solve ``a @ x = b`` for nonsingular ``a``."""
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"cannot solve with non-square shape {m.shape}")
    rhs = np.asarray(b, dtype=np.float64)
    if m.shape[0] == 0:
        return np.zeros(rhs.shape)
    lu, piv = _lu_with_pivot_check(m, tol, "matrix")
    return scipy.linalg.lu_solve((lu, piv), rhs)


def symmetric_eigenvalues(a, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending."""
    m = require_symmetric(a, tol)
    if m.size == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(m)


def symmetric_pseudo_inverse(a, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Moore-Penrose pseudo-inverse of a symmetric matrix.

    Eigenvalues of magnitude at most ``tol.entry * max(1, |lambda|_max)``
    are treated as exact zeros, so singular Schur complements of Laplacian
    blocks are handled without regularization.
    """
    m = require_symmetric(a, tol)
    if m.size == 0:
        return np.zeros((0, 0))
    w, v = np.linalg.eigh(m)
    cutoff = tol.entry * max(1.0, float(np.abs(w).max()))
    keep = np.abs(w) > cutoff
    inv_w = np.zeros_like(w)
    inv_w[keep] = 1.0 / w[keep]
    x = (v * inv_w) @ v.T
    return 0.5 * (x + x.T)


def group_inverse_laplacian(lap, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Group inverse of the Laplacian of a connected graph.

    Computed through the rank-one shift ``(L + J/n)^-1 - J/n`` with J the
    all-ones matrix; no eigendecomposition is needed for the inverse
    itself.  Satisfies ``L X L = L``, ``X L X = X``, ``L X = X L`` and
    ``X 1 = 0``.

    Raises
    ------
    ValueError
        If the matrix is not symmetric with zero row sums.
    PreconditionError
        If the graph is disconnected, detected as a second-smallest
        eigenvalue below the entry tolerance.
    """
    m = require_symmetric(lap, tol, "laplacian")
    n = m.shape[0]
    if n == 0:
        raise ValueError("laplacian must have at least one vertex")
    if float(np.abs(m.sum(axis=1)).max()) > tol.residual:
        raise ValueError("laplacian rows must sum to zero")
    if n > 1:
        ev = np.linalg.eigvalsh(m)
        if float(ev[1]) < tol.entry:
            raise PreconditionError("graph is disconnected (algebraic connectivity is zero)")
    shift = np.full((n, n), 1.0 / n)
    x = inverse(m + shift, tol) - shift
    return 0.5 * (x + x.T)


def block_one_inverse(l1, l2, l3, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Symmetric {1}-inverse of ``[[L1, L2], [L2.T, L3]]`` with L1 nonsingular.

    Uses the Schur complement ``S = L3 - L2.T L1^-1 L2`` and its spectral
    pseudo-inverse, so a singular S (the generic case for Laplacian
    splits) needs no special handling.  The result X satisfies
    ``M X M = M`` for the assembled block matrix M.
    """
    a = require_symmetric(l1, tol, "L1")
    d = require_symmetric(l3, tol, "L3")
    b = as_matrix(l2)
    p, q = a.shape[0], d.shape[0]
    if b.shape != (p, q):
        raise ValueError(f"off-diagonal block must have shape {(p, q)}, got {b.shape}")
    a_inv = inverse(a, tol)
    s = d - b.T @ a_inv @ b
    s_pinv = symmetric_pseudo_inverse(0.5 * (s + s.T), tol)
    coupling = a_inv @ b @ s_pinv
    x = np.zeros((p + q, p + q))
    x[:p, :p] = a_inv + coupling @ b.T @ a_inv
    x[:p, p:] = -coupling
    x[p:, :p] = -coupling.T
    x[p:, p:] = s_pinv
    return 0.5 * (x + x.T)
