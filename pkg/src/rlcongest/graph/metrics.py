"""Structural metrics: diameter, degrees and the spectral conductance bound."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .core import AttributedGraph, is_connected

INFINITE_DIAMETER = math.inf


@dataclass(frozen=True)
class GraphMetrics:
    """Summary metrics of one graph."""

    diameter: float  # hops; INFINITE_DIAMETER if disconnected
    max_degree: int
    min_degree: int
    m: int
    lambda2: float
    conductance_lb: float

    @property
    def connected(self) -> bool:
        return self.diameter != INFINITE_DIAMETER

    def to_dict(self) -> dict:
        data = asdict(self)
        if not self.connected:
            data["diameter"] = None
        else:
            data["diameter"] = int(self.diameter)
        return data


def hop_distances(g: AttributedGraph) -> np.ndarray:
    """All-pairs BFS hop counts; ``inf`` between components."""
    if g.n == 0:
        return np.zeros((0, 0))
    return shortest_path(csr_matrix(g.adjacency_matrix()), unweighted=True, directed=False)


def eccentricity(g: AttributedGraph, u: int) -> float:
    """Largest hop distance from ``u``."""
    dist = hop_distances(g)[u]
    return float(dist.max()) if dist.size else 0.0


def normalized_laplacian(g: AttributedGraph) -> np.ndarray:
    """``I - D^{-1/2} A D^{-1/2}``, with isolated nodes contributing zero rows."""
    a = g.adjacency_matrix()
    deg = a.sum(axis=1)
    inv_sqrt = np.zeros_like(deg)
    nz = deg > 0
    inv_sqrt[nz] = 1.0 / np.sqrt(deg[nz])
    lap = -inv_sqrt[:, None] * a * inv_sqrt[None, :]
    lap[np.diag_indices_from(lap)] = nz.astype(np.float64)
    return lap


def lambda2(g: AttributedGraph) -> float:
    """Second-smallest eigenvalue of the normalized Laplacian (0 if disconnected)."""
    if g.n < 2 or not is_connected(g):
        return 0.0
    eig = np.linalg.eigvalsh(normalized_laplacian(g))
    return float(max(eig[1], 0.0))


def metrics(g: AttributedGraph) -> GraphMetrics:
    """Compute GraphMetrics with dense all-pairs BFS and a dense eigensolve."""
    if g.n <= 1:
        diameter: float = 0.0
    else:
        dist = hop_distances(g)
        diameter = INFINITE_DIAMETER if np.isinf(dist).any() else float(dist.max())
    lam2 = 0.0 if diameter == INFINITE_DIAMETER else lambda2(g)
    return GraphMetrics(
        diameter=diameter,
        max_degree=g.max_degree,
        min_degree=g.min_degree,
        m=g.m,
        lambda2=lam2,
        conductance_lb=lam2 / 2.0,
    )
