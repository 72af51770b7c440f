"""Higher-order and distance-aware WL variants: k-WL, k-FWL and GD-WL."""

from __future__ import annotations

import itertools
from collections.abc import Sequence

import numpy as np

from ..exceptions import DisconnectedGraphError, InputError
from ..graph import AttributedGraph, ColorVector, hop_distances
from ..graph.transforms import DEFAULT_TUPLE_BUDGET, check_tuple_budget
from .reference import same_partition

# Fixed-point scale for real-valued distances (resistance) inside GD-WL keys.
DISTANCE_SCALE = 10**9

KWL_VARIANTS = ("kwl", "kfwl")


def rank_rows(keys: np.ndarray) -> np.ndarray:
    """1-based dense lexicographic rank of each row of a 2-D integer array."""
    if keys.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    _, inverse = np.unique(keys, axis=0, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64) + 1


def _as_tensor(x: Sequence[int], n: int, k: int) -> np.ndarray:
    arr = np.asarray(x, dtype=np.int64)
    if arr.size != n**k:
        raise InputError(f"Tuple coloring has {arr.size} entries, expected {n}^{k}")
    return arr.reshape((n,) * k) if k else arr


def _substitutions(c: np.ndarray, i: int) -> np.ndarray:
    """``out[t..., w] = c[t with coordinate i replaced by w]``, shape ``(n,)*(k+1)``."""
    moved = np.moveaxis(c, i, -1)  # coordinate i becomes the trailing w axis
    expanded = np.expand_dims(moved, axis=i)
    return np.broadcast_to(expanded, c.shape + (c.shape[0],))


def ktuple_initial_colors(
    g: AttributedGraph,
    k: int,
    x: Sequence[int] | None = None,
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> ColorVector:
    """Rank of each k-tuple's ordered isomorphism type.

    The signature of tuple ``t`` is its k-by-k equality/adjacency pattern
    (2 equal, 1 adjacent, 0 otherwise) followed by the base colors of its
    coordinates.
    """
    count = check_tuple_budget(g.n, k, budget)
    if count == 0:
        return ()
    base = np.zeros(g.n, dtype=np.int64) if x is None else np.asarray(x, dtype=np.int64)
    adj = g.adjacency_matrix().astype(np.int64)
    pattern = adj + 2 * np.eye(g.n, dtype=np.int64)
    coords = np.array(list(itertools.product(range(g.n), repeat=k)), dtype=np.int64)
    cols = [pattern[coords[:, i], coords[:, j]] for i in range(k) for j in range(k)]
    cols += [base[coords[:, i]] for i in range(k)]
    return tuple(rank_rows(np.stack(cols, axis=1)).tolist())


def _kwl_keys(c: np.ndarray) -> np.ndarray:
    k = c.ndim
    n = c.shape[0]
    parts = [c.reshape(-1, 1)]
    for i in range(k):
        multiset = np.sort(_substitutions(c, i), axis=-1)
        parts.append(multiset.reshape(-1, n))
    return np.concatenate(parts, axis=1)


def _kfwl_keys(c: np.ndarray) -> np.ndarray:
    k = c.ndim
    n = c.shape[0]
    subs = np.stack([_substitutions(c, i) for i in range(k)], axis=-1)  # (..., w, k)
    flat = subs.reshape(-1, k)
    codes = rank_rows(flat).reshape(-1, n)
    multiset = np.sort(codes, axis=1)
    return np.concatenate([c.reshape(-1, 1), multiset], axis=1)


def kwl_step(
    g: AttributedGraph,
    k: int,
    x: Sequence[int],
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> ColorVector:
    """One k-WL step: rank of (own color, k substitution multisets over all of V)."""
    check_tuple_budget(g.n, k, budget)
    c = _as_tensor(x, g.n, k)
    if c.size == 0:
        return ()
    return tuple(rank_rows(_kwl_keys(c)).tolist())


def kfwl_step(
    g: AttributedGraph,
    k: int,
    x: Sequence[int],
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> ColorVector:
    """One k-FWL step: rank of (own color, multiset over w of the k substituted colors)."""
    check_tuple_budget(g.n, k, budget)
    c = _as_tensor(x, g.n, k)
    if c.size == 0:
        return ()
    return tuple(rank_rows(_kfwl_keys(c)).tolist())


def kwl_refine_stable(
    g: AttributedGraph,
    k: int,
    variant: str = "kwl",
    x: Sequence[int] | None = None,
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> tuple[ColorVector, int]:
    """Run k-WL or k-FWL from the isomorphism-type start until the partition is stable."""
    step = _variant_step(variant)
    current = ktuple_initial_colors(g, k, x, budget)
    iterations = 0
    while True:
        nxt = step(g, k, current, budget)
        iterations += 1
        if same_partition(current, nxt) or iterations >= max(len(current), 1):
            return nxt, iterations
        current = nxt


def kwl_distinguishes(
    g1: AttributedGraph,
    g2: AttributedGraph,
    k: int,
    variant: str = "kwl",
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> bool:
    """k-WL / k-FWL test with one shared ranking across both graphs."""
    if g1.n != g2.n:
        return True
    keys_of = _kwl_keys if _variant_step(variant) is kwl_step else _kfwl_keys
    n = g1.n
    joint = _joint_initial(g1, g2, k, budget)
    c1, c2 = joint[: n**k], joint[n**k :]
    for _ in range(2 * n**k + 1):
        if not np.array_equal(np.sort(c1), np.sort(c2)):
            return True
        keys = np.concatenate(
            [keys_of(c1.reshape((n,) * k)), keys_of(c2.reshape((n,) * k))], axis=0
        )
        ranks = rank_rows(keys)
        n1, n2 = ranks[: n**k], ranks[n**k :]
        if same_partition(
            np.concatenate([c1, c2]).tolist(), np.concatenate([n1, n2]).tolist()
        ):
            return not np.array_equal(np.sort(n1), np.sort(n2))
        c1, c2 = n1, n2
    return not np.array_equal(np.sort(c1), np.sort(c2))


def _joint_initial(
    g1: AttributedGraph, g2: AttributedGraph, k: int, budget: int
) -> np.ndarray:
    """Initial tuple colors of both graphs ranked in one table."""
    check_tuple_budget(g1.n, k, budget)
    rows = []
    for g in (g1, g2):
        pattern = g.adjacency_matrix().astype(np.int64) + 2 * np.eye(g.n, dtype=np.int64)
        coords = np.array(list(itertools.product(range(g.n), repeat=k)), dtype=np.int64)
        cols = [pattern[coords[:, i], coords[:, j]] for i in range(k) for j in range(k)]
        rows.append(np.stack(cols, axis=1))
    return rank_rows(np.concatenate(rows, axis=0))


def _variant_step(variant: str):
    if variant == "kwl":
        return kwl_step
    if variant == "kfwl":
        return kfwl_step
    raise InputError(f"Unknown tuple variant {variant!r}; expected one of {KWL_VARIANTS}")


def spd_matrix(g: AttributedGraph) -> np.ndarray:
    """All-pairs shortest-path hop counts as an int64 DistanceMatrix.

    Raises:
        DisconnectedGraphError: If some pair is unreachable
    """
    dist = hop_distances(g)
    if np.isinf(dist).any():
        raise DisconnectedGraphError("Shortest-path distances need a connected graph")
    return dist.astype(np.int64)


def rd_matrix(g: AttributedGraph) -> np.ndarray:
    """Resistance distances as a real-valued DistanceMatrix."""
    from ..resistance import resistance_matrix

    return resistance_matrix(g)


def _quantize(dist: np.ndarray) -> np.ndarray:
    if np.issubdtype(dist.dtype, np.integer):
        return dist.astype(np.int64)
    return np.rint(np.asarray(dist, dtype=np.float64) * DISTANCE_SCALE).astype(np.int64)


def gdwl_step(g: AttributedGraph, dist: np.ndarray, x: Sequence[int]) -> ColorVector:
    """GD-WL step: rank of the multiset ``{(d(u, v), x_v) : v in V}`` per node."""
    n = g.n
    dist = np.asarray(dist)
    if dist.shape != (n, n):
        raise InputError(f"Distance matrix shape {dist.shape} does not match n={n}")
    if n == 0:
        return ()
    d = _quantize(dist)
    colors = np.asarray(x, dtype=np.int64)
    pairs = np.stack([d.reshape(-1), np.broadcast_to(colors, (n, n)).reshape(-1)], axis=1)
    codes = rank_rows(pairs).reshape(n, n)
    return tuple(rank_rows(np.sort(codes, axis=1)).tolist())
