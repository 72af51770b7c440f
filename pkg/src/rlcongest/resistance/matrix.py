"""Effective resistance from the Laplacian pseudo-inverse."""

from __future__ import annotations

import numpy as np
from scipy.sparse.csgraph import laplacian

from ..exceptions import DisconnectedGraphError
from ..graph import AttributedGraph, is_connected

EIG_CUTOFF = 1e-9


def laplacian_matrix(g: AttributedGraph) -> np.ndarray:
    """Dense combinatorial Laplacian ``D - A``."""
    return laplacian(g.adjacency_matrix())


def laplacian_pinv(g: AttributedGraph, cutoff: float = EIG_CUTOFF) -> np.ndarray:
    """Moore-Penrose pseudo-inverse of the Laplacian via a symmetric eigensolve.

    Eigenvalues at or below ``cutoff`` are treated as the kernel; the result
    is projected onto the span of the Laplacian.
    """
    vals, vecs = np.linalg.eigh(laplacian_matrix(g))
    keep = vals > cutoff
    inv = np.zeros_like(vals)
    inv[keep] = 1.0 / vals[keep]
    return (vecs * inv) @ vecs.T


def resistance_matrix(g: AttributedGraph, cutoff: float = EIG_CUTOFF) -> np.ndarray:
    """All-pairs effective resistance ``R(s, t) = (e_s - e_t)^T L+ (e_s - e_t)``.

    Args:
        g: Connected graph with unit-resistance edges
        cutoff: Eigenvalues at or below this are not inverted

    Returns:
        Symmetric ``n x n`` float64 matrix with a zero diagonal

    Raises:
        DisconnectedGraphError: If ``g`` has more than one component
    """
    if not is_connected(g):
        raise DisconnectedGraphError("Effective resistance needs a connected graph")
    if g.n == 0:
        return np.zeros((0, 0))
    pinv = laplacian_pinv(g, cutoff)
    diag = np.diag(pinv)
    r = diag[:, None] + diag[None, :] - 2.0 * pinv
    r = (r + r.T) / 2.0
    np.fill_diagonal(r, 0.0)
    return np.clip(r, 0.0, None)


def resistance_violations(g: AttributedGraph, r: np.ndarray, tol: float = 1e-9) -> list[str]:
    """List every ResistanceMatrix invariant that ``r`` breaks on ``g``.

    Checks symmetry, zero diagonal, nonnegativity, the triangle inequality
    and ``0 < R(u, v) <= 1`` on edges, each up to ``tol``.
    """
    problems = []
    if r.shape != (g.n, g.n):
        return [f"shape {r.shape} does not match n={g.n}"]
    if not np.allclose(r, r.T, atol=tol, rtol=0.0):
        problems.append("not symmetric")
    if np.abs(np.diag(r)).max(initial=0.0) > tol:
        problems.append("nonzero diagonal")
    if r.min(initial=0.0) < -tol:
        problems.append("negative entry")
    # r[s, t] <= r[s, u] + r[u, t] for every u, checked one pivot at a time
    for u in range(g.n):
        if (r - (r[:, u][:, None] + r[u, :][None, :]) > tol).any():
            problems.append(f"triangle inequality fails through node {u}")
            break
    for u, v in g.sorted_edges:
        if not 0.0 < r[u, v] <= 1.0 + tol:
            problems.append(f"edge ({u}, {v}) has resistance {r[u, v]:.6g}")
    return problems
