"""Deterministic graph generators."""

from __future__ import annotations

import numpy as np

from ..exceptions import ParameterError
from ..utils import get_logger, make_rng
from .core import AttributedGraph

logger = get_logger()

FAMILIES = ("path", "cycle", "star", "complete")


def gen_family(kind: str, n: int) -> AttributedGraph:
    """Build a named graph family on nodes ``0..n-1``.

    Args:
        kind: One of ``path``, ``cycle``, ``star`` (center 0), ``complete``
        n: Node count (at least 2, at least 3 for ``cycle``)

    Returns:
        The requested graph

    Raises:
        ParameterError: If ``kind`` is unknown or ``n`` is too small
    """
    if kind not in FAMILIES:
        raise ParameterError(f"Unknown family {kind!r}; expected one of {FAMILIES}")
    min_n = 3 if kind == "cycle" else 2
    if n < min_n:
        raise ParameterError(f"{kind} needs n >= {min_n}, got {n}")

    if kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif kind == "star":
        edges = [(0, i) for i in range(1, n)]
    else:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return AttributedGraph.from_edges(n, edges)


def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All pairs ``u < v`` in lexicographic order."""
    return np.triu_indices(n, k=1)


def draw_pairs(n: int, p: float, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Keep each pair ``u < v`` with probability ``p``, one draw per pair."""
    rows, cols = _pair_arrays(n)
    keep = rng.random(rows.size) < p
    return list(zip(rows[keep].tolist(), cols[keep].tolist()))


def gen_erdos_renyi(n: int, p: float, seed: int) -> AttributedGraph:
    """Sample G(n, p), visiting pairs in lexicographic order.

    The output is a pure function of ``(n, p, seed)``: one uniform draw per
    pair ``(u, v)``, ``u < v``, taken in lexicographic order from the seed's
    Philox stream.

    Raises:
        ParameterError: If ``n < 0`` or ``p`` is outside ``[0, 1]``
    """
    if n < 0:
        raise ParameterError(f"Node count must be nonnegative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"Edge probability must be in [0, 1], got {p}")
    return AttributedGraph.from_edges(n, draw_pairs(n, p, make_rng(seed)))


def gen_connected_gnm(n: int, m: int, seed: int) -> AttributedGraph:
    """Random connected graph with exactly ``m`` edges.

    A random recursive tree spans the nodes; the remaining ``m - (n - 1)``
    edges are drawn uniformly from the unused pairs.

    Raises:
        ParameterError: If ``m`` is outside ``[n - 1, n(n - 1)/2]``
    """
    max_m = n * (n - 1) // 2
    if n < 1 or not (n - 1) <= m <= max_m:
        raise ParameterError(f"Need n-1 <= m <= {max_m} for n={n}, got m={m}")
    rng = make_rng(seed, 1)
    edges = set()
    for v in range(1, n):
        u = int(rng.integers(0, v))
        edges.add((u, v))
    rows, cols = _pair_arrays(n)
    free = [(int(u), int(v)) for u, v in zip(rows, cols) if (int(u), int(v)) not in edges]
    extra = m - len(edges)
    if extra:
        picks = rng.choice(len(free), size=extra, replace=False)
        edges.update(free[i] for i in sorted(picks.tolist()))
    return AttributedGraph.from_edges(n, edges)
