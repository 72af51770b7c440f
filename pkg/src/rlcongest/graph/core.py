"""Attributed undirected simple graphs, the universe every algorithm runs on."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from functools import cached_property

import networkx as nx
import numpy as np

from ..exceptions import InputError

Edge = tuple[int, int]
# A ColorVector holds one word (color) per node.
ColorVector = tuple[int, ...]

WORD_MIN = -(2**63)
WORD_MAX = 2**63 - 1


def canonical_edge(u: int, v: int) -> Edge:
    """Return the unordered pair ``(u, v)`` as ``(min, max)``."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class AttributedGraph:
    """Undirected simple graph with per-node word-vector features.

    Attributes:
        n: Node count; nodes are ``0..n-1``
        edges: Unordered pairs stored as ``(u, v)`` with ``u < v``
        features: One equal-length word tuple per node (possibly empty tuples)
        labels: Optional per-node word, used for unique or random IDs
        virtual_edges: Subset of ``edges`` added by an overlay; excluded from WL types
        virtual_node: Index of an added virtual node, if any
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    features: tuple[tuple[int, ...], ...] = ()
    labels: tuple[int, ...] | None = None
    virtual_edges: frozenset[Edge] = field(default_factory=frozenset)
    virtual_node: int | None = None

    def __post_init__(self):
        if not self.features:
            object.__setattr__(self, "features", tuple(() for _ in range(self.n)))
        validate_graph(self)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        features: Sequence[Sequence[int]] | None = None,
        labels: Sequence[int] | None = None,
    ) -> AttributedGraph:
        """Build a graph from any iterable of pairs, canonicalising each pair."""
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InputError(f"Self-loop at node {u}")
            canon.add(canonical_edge(u, v))
        feats = tuple(tuple(int(x) for x in f) for f in features) if features else ()
        labs = tuple(int(x) for x in labels) if labels is not None else None
        return cls(n=n, edges=frozenset(canon), features=feats, labels=labs)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuple per node, virtual edges included."""
        return _adjacency(self.n, self.edges)

    @cached_property
    def original_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuple per node over non-virtual edges only."""
        if not self.virtual_edges:
            return self.adjacency
        return _adjacency(self.n, self.edges - self.virtual_edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def feature_width(self) -> int:
        return len(self.features[0]) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix as float64."""
        a = np.zeros((self.n, self.n), dtype=np.float64)
        if self.edges:
            idx = np.array(self.sorted_edges, dtype=np.int64)
            a[idx[:, 0], idx[:, 1]] = 1.0
            a[idx[:, 1], idx[:, 0]] = 1.0
        return a

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges)
        return g

    def original(self) -> AttributedGraph:
        """The graph with overlay edges and any virtual node removed."""
        if self.virtual_node is not None:
            keep = [u for u in range(self.n) if u != self.virtual_node]
            from .transforms import induced_subgraph

            base = induced_subgraph(self, keep)
            width = self.feature_width - 1
            feats = tuple(f[:width] for f in base.features)
            return replace(base, features=feats)
        if self.virtual_edges:
            return replace(
                self,
                edges=self.edges - self.virtual_edges,
                virtual_edges=frozenset(),
            )
        return self


def _adjacency(n: int, edges: Iterable[Edge]) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(a)) for a in adj)


def validate_graph(g: AttributedGraph) -> None:
    """Check the AttributedGraph invariants.

    Raises:
        InputError: If any invariant fails
    """
    if g.n < 0:
        raise InputError(f"Negative node count {g.n}")
    for u, v in g.edges:
        if not (0 <= u < v < g.n):
            raise InputError(f"Edge ({u}, {v}) is not a canonical pair inside [0, {g.n})")
    if len(g.features) != g.n:
        raise InputError(f"Expected {g.n} feature vectors, got {len(g.features)}")
    widths = {len(f) for f in g.features}
    if len(widths) > 1:
        raise InputError(f"Feature vectors have unequal lengths {sorted(widths)}")
    if g.labels is not None and len(g.labels) != g.n:
        raise InputError(f"Expected {g.n} labels, got {len(g.labels)}")
    if not g.virtual_edges <= g.edges:
        raise InputError("Virtual edges must be a subset of the edge set")
    if g.virtual_node is not None and not 0 <= g.virtual_node < g.n:
        raise InputError(f"Virtual node {g.virtual_node} outside [0, {g.n})")


def validate_colors(g: AttributedGraph, x: Sequence[int]) -> ColorVector:
    """Check that ``x`` is a valid ColorVector for ``g`` and return it as a tuple.

    Colors are nonnegative words below the cap ``p(n) = max(n, 1)**2``.

    Raises:
        InputError: If the length or a value is out of range
    """
    if len(x) != g.n:
        raise InputError(f"Color vector has {len(x)} entries for {g.n} nodes")
    cap = color_cap(g.n)
    colors = tuple(int(c) for c in x)
    for u, c in enumerate(colors):
        if not 0 <= c < cap:
            raise InputError(f"Color {c} at node {u} outside [0, {cap})")
    return colors


def color_cap(n: int) -> int:
    """The color domain size p(n) = n^2 (at least 1)."""
    return max(n, 1) ** 2


def uniform_colors(n: int, value: int = 0) -> ColorVector:
    return tuple(value for _ in range(n))


def is_connected(g: AttributedGraph) -> bool:
    """True for graphs with at most one node or a single component."""
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n
