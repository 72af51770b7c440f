"""Preprocessing transforms that alter topology or node identity."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import replace

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..exceptions import InputError, ParameterError, ResourceError
from ..utils import get_logger, make_rng
from .core import AttributedGraph, canonical_edge
from .generators import draw_pairs

logger = get_logger()

DEFAULT_TUPLE_BUDGET = 10**6
VIRTUAL_MARKER = 1
# Stream ids under a seed: 1 spanning trees, 2 random IDs, 3 overlays.
OVERLAY_STREAM = 3


def add_virtual_node(g: AttributedGraph) -> AttributedGraph:
    """Append node ``n`` adjacent to every original node.

    A trailing feature column marks the virtual node with 1 and every
    original node with 0.
    """
    vn = g.n
    edges = set(g.edges)
    edges.update((u, vn) for u in range(g.n))
    width = g.feature_width
    feats = tuple(f + (0,) for f in g.features) + ((0,) * width + (VIRTUAL_MARKER,),)
    labels = None
    if g.labels is not None:
        labels = g.labels + (max(g.labels, default=-1) + 1,)
    return AttributedGraph(
        n=g.n + 1,
        edges=frozenset(edges),
        features=feats,
        labels=labels,
        virtual_edges=g.virtual_edges,
        virtual_node=vn,
    )


def overlay_probability(n: int, delta: float) -> float:
    """Edge probability ``(1/2 + delta) log2(n) / n`` capped at 1."""
    if n < 2:
        return 0.0
    return min(1.0, (0.5 + delta) * math.log2(n) / n)


def add_virtual_edges(g: AttributedGraph, delta: float, seed: int) -> AttributedGraph:
    """Union ``g`` with an Erdős–Rényi overlay and flag the added pairs.

    Raises:
        ParameterError: If ``delta <= 0``
    """
    if delta <= 0:
        raise ParameterError(f"Overlay delta must be positive, got {delta}")
    p = overlay_probability(g.n, delta)
    pairs = draw_pairs(g.n, p, make_rng(seed, OVERLAY_STREAM))
    added = frozenset(pairs) - g.edges
    logger.debug(f"Overlay p={p:.4f} added {len(added)} virtual edges to n={g.n}")
    return replace(
        g,
        edges=g.edges | added,
        virtual_edges=g.virtual_edges | added,
    )


def assign_unique_ids(g: AttributedGraph) -> AttributedGraph:
    """Set ``labels[u] = u``."""
    ids = tuple(range(g.n))
    if g.labels == ids:
        return g
    return replace(g, labels=ids)


def assign_random_ids(g: AttributedGraph, seed: int) -> AttributedGraph:
    """Draw distinct labels uniformly from ``[0, n^3)``."""
    space = max(g.n, 2) ** 3
    ids = make_rng(seed, 2).choice(space, size=g.n, replace=False)
    return replace(g, labels=tuple(int(i) for i in ids))


def tuple_index(tup: Sequence[int], n: int) -> int:
    """Lexicographic index of a k-tuple over ``[0, n)``."""
    idx = 0
    for c in tup:
        idx = idx * n + c
    return idx


def check_tuple_budget(n: int, k: int, budget: int) -> int:
    """Return ``n**k`` or raise if it exceeds ``budget``."""
    if k < 1:
        raise ParameterError(f"Tuple order must be >= 1, got {k}")
    count = n**k
    if count > budget:
        raise ResourceError(f"{n}^{k} = {count} tuples exceeds the budget of {budget}")
    return count


def build_ktuple_graph(
    g: AttributedGraph, k: int, budget: int = DEFAULT_TUPLE_BUDGET
) -> AttributedGraph:
    """Graph on ``V^k`` whose edges join tuples at Hamming distance 1.

    Tuple nodes are indexed lexicographically; each tuple's features are the
    concatenated base features of its coordinates.

    Raises:
        ResourceError: If ``n**k`` exceeds ``budget``
    """
    count = check_tuple_budget(g.n, k, budget)
    n = g.n
    idx = np.arange(count, dtype=np.int64)
    us: list[np.ndarray] = []
    vs: list[np.ndarray] = []
    for i in range(k):
        stride = n ** (k - 1 - i)
        digit = (idx // stride) % n
        for d in range(1, n):
            ok = digit + d < n
            us.append(idx[ok])
            vs.append(idx[ok] + d * stride)
    if us:
        src = np.concatenate(us).tolist()
        dst = np.concatenate(vs).tolist()
    else:
        src, dst = [], []

    coords = np.stack([(idx // n ** (k - 1 - i)) % n for i in range(k)], axis=1) if count else []
    feats = tuple(
        tuple(x for c in row for x in g.features[int(c)]) for row in coords
    )
    return AttributedGraph(
        n=count,
        edges=frozenset(zip(src, dst)),
        features=feats,
    )


def induced_subgraph(g: AttributedGraph, keep: Sequence[int]) -> AttributedGraph:
    """Subgraph on ``keep``, relabelled ``0..len(keep)-1`` in the given order."""
    index = {u: i for i, u in enumerate(keep)}
    edges = set()
    virtual = set()
    for u, v in g.edges:
        if u in index and v in index:
            e = canonical_edge(index[u], index[v])
            edges.add(e)
            if (u, v) in g.virtual_edges:
                virtual.add(e)
    vn = index.get(g.virtual_node) if g.virtual_node is not None else None
    return AttributedGraph(
        n=len(keep),
        edges=frozenset(edges),
        features=tuple(g.features[u] for u in keep),
        labels=tuple(g.labels[u] for u in keep) if g.labels is not None else None,
        virtual_edges=frozenset(virtual),
        virtual_node=vn,
    )


def components(g: AttributedGraph) -> list[list[int]]:
    """Connected components, largest first, ties broken by smallest node."""
    if g.n == 0:
        return []
    count, labels = connected_components(csr_matrix(g.adjacency_matrix()), directed=False)
    groups: list[list[int]] = [[] for _ in range(count)]
    for u, c in enumerate(labels.tolist()):
        groups[c].append(u)
    return sorted(groups, key=lambda c: (-len(c), c[0]))


def largest_component(g: AttributedGraph) -> AttributedGraph:
    """Induced subgraph on the largest connected component."""
    comps = components(g)
    if len(comps) <= 1:
        return g
    return induced_subgraph(g, comps[0])


def relabel(g: AttributedGraph, perm: Sequence[int]) -> AttributedGraph:
    """Move node ``u`` to position ``perm[u]``."""
    if sorted(perm) != list(range(g.n)):
        raise InputError("Relabelling must be a permutation of the nodes")
    inverse = [0] * g.n
    for u, p in enumerate(perm):
        inverse[p] = u
    moved = induced_subgraph(g, inverse)
    return moved


def disjoint_union(g1: AttributedGraph, g2: AttributedGraph) -> AttributedGraph:
    """Place ``g2`` after ``g1`` with node indices shifted by ``g1.n``."""
    if g1.n and g2.n and g1.feature_width != g2.feature_width:
        raise InputError("Cannot union graphs with different feature widths")
    shift = g1.n
    edges = set(g1.edges) | {(u + shift, v + shift) for u, v in g2.edges}
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = g1.labels + g2.labels
    return AttributedGraph(
        n=g1.n + g2.n,
        edges=frozenset(edges),
        features=g1.features + g2.features,
        labels=labels,
    )
