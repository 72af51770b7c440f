"""Sequential 1-WL refinement: the correctness oracle for distributed variants."""

from __future__ import annotations

from collections.abc import Hashable, Sequence

from ..graph import AttributedGraph, ColorVector, validate_colors

# (own color, nondecreasing neighbour colors)
WlType = tuple[int, tuple[int, ...]]


def wl_types(g: AttributedGraph, x: Sequence[int]) -> list[WlType]:
    """WL-type of every node over the original (non-virtual) edges."""
    adj = g.original_adjacency
    return [(x[u], tuple(sorted(x[v] for v in adj[u]))) for u in range(g.n)]


def dense_rank(keys: Sequence[Hashable]) -> ColorVector:
    """1-based dense rank of each key under its natural order."""
    table = {k: i + 1 for i, k in enumerate(sorted(set(keys)))}
    return tuple(table[k] for k in keys)


def wl_step_reference(g: AttributedGraph, x: Sequence[int]) -> ColorVector:
    """One WL iteration: each node's new color is the rank of its WL-type."""
    x = validate_colors(g, x)
    return dense_rank(wl_types(g, x))


def verify_wl_coloring(g: AttributedGraph, x: Sequence[int], y: Sequence[int]) -> bool:
    """Check ``y_u == y_v  <=>  type(u) == type(v)`` for every pair of nodes."""
    x = validate_colors(g, x)
    if len(y) != g.n:
        return False
    color_of_type: dict[WlType, int] = {}
    type_of_color: dict[int, WlType] = {}
    for t, c in zip(wl_types(g, x), y):
        if color_of_type.setdefault(t, c) != c:
            return False
        if type_of_color.setdefault(c, t) != t:
            return False
    return True


def same_partition(x: Sequence[Hashable], y: Sequence[Hashable]) -> bool:
    """True iff ``x`` and ``y`` induce the same partition of the index set."""
    if len(x) != len(y):
        return False
    pairs = set(zip(x, y))
    return len(pairs) == len(set(x)) == len(set(y))


def wl_refine_stable(g: AttributedGraph, x: Sequence[int]) -> tuple[ColorVector, int]:
    """Iterate WL steps until the induced partition stops changing.

    Returns:
        Tuple of (last coloring, number of steps run). The last step is the one
        that confirmed stability, so the count is at least 1.
    """
    current = validate_colors(g, x)
    iterations = 0
    while True:
        nxt = wl_step_reference(g, current)
        iterations += 1
        if same_partition(current, nxt) or iterations >= max(g.n, 1):
            return nxt, iterations
        current = nxt


def wl_distinguishes(
    g1: AttributedGraph,
    g2: AttributedGraph,
    x1: Sequence[int] | None = None,
    x2: Sequence[int] | None = None,
) -> bool:
    """1-WL test with one shared ranking across both graphs.

    Refines both colorings in lock step, ranking the union of their WL-types
    at each step, and reports whether the color histograms ever differ.
    """
    if g1.n != g2.n:
        return True
    c1 = tuple(x1) if x1 is not None else (0,) * g1.n
    c2 = tuple(x2) if x2 is not None else (0,) * g2.n
    for _ in range(g1.n + 1):
        if sorted(c1) != sorted(c2):
            return True
        ranks = dense_rank(wl_types(g1, c1) + wl_types(g2, c2))
        n1, n2 = ranks[: g1.n], ranks[g1.n :]
        if same_partition(c1 + c2, n1 + n2):
            return sorted(n1) != sorted(n2)
        c1, c2 = n1, n2
    return sorted(c1) != sorted(c2)
