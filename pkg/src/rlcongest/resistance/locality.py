"""Cut-edge and cut-vertex predicates from resistance distances, with classical oracles."""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from typing import Any

import click
import networkx as nx
import numpy as np

from ..exceptions import DisconnectedGraphError, InputError, ParameterError
from ..graph import (
    AttributedGraph,
    canonical_edge,
    gen_erdos_renyi,
    gen_family,
    is_connected,
    largest_component,
)
from ..graph.core import Edge
from ..utils import get_logger, make_rng
from .matrix import laplacian_matrix, resistance_matrix

logger = get_logger()

PREDICATE_TOL = 1e-6
MATRIX_TREE_LIMIT = 64


def cut_edge_local(r: np.ndarray, edge: Edge, tol: float = PREDICATE_TOL) -> bool:
    """An edge is a bridge exactly when its endpoints are at resistance 1."""
    u, v = edge
    return abs(float(r[u, v]) - 1.0) <= tol


def cut_vertex_local(g: AttributedGraph, r: np.ndarray, u: int, tol: float = PREDICATE_TOL) -> bool:
    """True iff two distinct neighbours ``s, t`` of ``u`` satisfy ``R(s,t) = R(s,u) + R(u,t)``."""
    nbrs = np.asarray(g.neighbors(u), dtype=np.int64)
    if nbrs.size < 2:
        return False
    gap = r[np.ix_(nbrs, nbrs)] - r[nbrs, u][:, None] - r[u, nbrs][None, :]
    np.fill_diagonal(gap, np.inf)
    return bool((np.abs(gap) <= tol).any())


def cut_sets_tarjan(g: AttributedGraph) -> tuple[frozenset[Edge], frozenset[int]]:
    """Bridges and articulation points by an iterative low-link DFS, per component."""
    order = [-1] * g.n
    low = [0] * g.n
    bridges: set[Edge] = set()
    cuts: set[int] = set()
    counter = 0
    for root in range(g.n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        root_children = 0
        # frames: (node, parent, iterator over neighbours)
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if order[v] == -1:
                    order[v] = low[v] = counter
                    counter += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(g.neighbors(v))))
                    advanced = True
                    break
                low[u] = min(low[u], order[v])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] > order[parent]:
                bridges.add(canonical_edge(parent, u))
            if parent != root and low[u] >= order[parent]:
                cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return frozenset(bridges), frozenset(cuts)


def _log_tree_count(lap: np.ndarray) -> float:
    """Natural log of the spanning-tree count from a Laplacian (matrix-tree theorem)."""
    sign, logdet = np.linalg.slogdet(lap[1:, 1:])
    if sign <= 0:
        return -np.inf
    return float(logdet)


def spanning_tree_edge_fraction(g: AttributedGraph, edge: Edge) -> float:
    """Share of spanning trees of ``g`` that contain ``edge``.

    Both counts come from reduced-Laplacian log-determinants; the trees
    containing ``edge`` are all trees minus the trees of ``g - edge``.

    Raises:
        ParameterError: If ``g`` has more than ``MATRIX_TREE_LIMIT`` nodes
        InputError: If ``edge`` is not an edge of ``g``
        DisconnectedGraphError: If ``g`` is disconnected
    """
    if g.n > MATRIX_TREE_LIMIT:
        raise ParameterError(f"Matrix-tree oracle is limited to n <= {MATRIX_TREE_LIMIT}, got {g.n}")
    u, v = edge
    if not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    if not is_connected(g):
        raise DisconnectedGraphError("Spanning trees need a connected graph")
    without = AttributedGraph(n=g.n, edges=g.edges - {canonical_edge(u, v)})
    if not is_connected(without):
        return 1.0
    lap = laplacian_matrix(g)
    total = _log_tree_count(lap)
    rest = _log_tree_count(laplacian_matrix(without))
    return float(1.0 - np.exp(rest - total))


@dataclass(frozen=True)
class GraphLocality:
    """Predicted and classical cut flags for one sampled graph."""

    index: int
    seed: int
    n_sampled: int
    p: float
    n: int
    m: int
    edges: tuple[Edge, ...]
    edge_predicted: tuple[bool, ...]
    edge_actual: tuple[bool, ...]
    node_predicted: tuple[bool, ...]
    node_actual: tuple[bool, ...]

    @property
    def edge_correct(self) -> bool:
        return self.edge_predicted == self.edge_actual

    @property
    def node_correct(self) -> bool:
        return self.node_predicted == self.node_actual

    def to_row(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "seed": self.seed,
            "n_sampled": self.n_sampled,
            "p": self.p,
            "component_n": self.n,
            "component_m": self.m,
            "bridges": sum(self.edge_actual),
            "cut_vertices": sum(self.node_actual),
            "edge_correct": int(self.edge_correct),
            "node_correct": int(self.node_correct),
        }


@dataclass
class LocalityReport:
    """Graph-level accuracy of the local predicates over a sampled dataset.

    An accuracy is the fraction of graphs whose every flag matches the
    classical oracle; it is None for an empty dataset.
    """

    seed: int
    n_range: tuple[int, int]
    graphs: list[GraphLocality] = field(default_factory=list)
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.graphs)

    @property
    def edge_accuracy(self) -> float | None:
        if not self.graphs:
            return None
        return sum(g.edge_correct for g in self.graphs) / len(self.graphs)

    @property
    def node_accuracy(self) -> float | None:
        if not self.graphs:
            return None
        return sum(g.node_correct for g in self.graphs) / len(self.graphs)

    def summary(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "n_range": list(self.n_range),
            "count": self.count,
            "edge_accuracy": self.edge_accuracy,
            "node_accuracy": self.node_accuracy,
            "policy": "largest connected component",
            "failures": len(self.failures),
        }

    def rows(self) -> list[dict[str, Any]]:
        return [g.to_row() for g in self.graphs]


def five_over_n(n: int) -> float:
    return min(1.0, 5.0 / n) if n > 0 else 0.0


def assess_graph(
    g: AttributedGraph, tol: float = PREDICATE_TOL
) -> tuple[tuple[bool, ...], tuple[bool, ...], tuple[bool, ...], tuple[bool, ...]]:
    """Run both local predicates and the Tarjan oracle on a connected graph.

    Returns:
        Tuple of (edge predicted, edge actual, node predicted, node actual),
        edges in sorted order
    """
    r = resistance_matrix(g)
    bridges, cuts = cut_sets_tarjan(g)
    edges = g.sorted_edges
    return (
        tuple(cut_edge_local(r, e, tol) for e in edges),
        tuple(e in bridges for e in edges),
        tuple(cut_vertex_local(g, r, u, tol) for u in range(g.n)),
        tuple(u in cuts for u in range(g.n)),
    )


def _sample(
    index: int, seed: int, n_range: tuple[int, int], p_rule: Callable[[int], float], tol: float
) -> GraphLocality:
    rng = make_rng(seed, index)
    n_sampled = int(rng.integers(n_range[0], n_range[1] + 1))
    p = float(p_rule(n_sampled))
    graph_seed = int(rng.integers(0, 2**62))
    g = largest_component(gen_erdos_renyi(n_sampled, p, graph_seed))
    edge_pred, edge_act, node_pred, node_act = assess_graph(g, tol)
    return GraphLocality(
        index=index,
        seed=graph_seed,
        n_sampled=n_sampled,
        p=p,
        n=g.n,
        m=g.m,
        edges=g.sorted_edges,
        edge_predicted=edge_pred,
        edge_actual=edge_act,
        node_predicted=node_pred,
        node_actual=node_act,
    )


def experiment_locality(
    count: int = 200,
    n_range: tuple[int, int] = (20, 100),
    p_rule: Callable[[int], float] = five_over_n,
    seed: int = 1,
    parallel_jobs: int = 1,
    tol: float = PREDICATE_TOL,
) -> LocalityReport:
    """Sample ER graphs and score the resistance predicates against Tarjan.

    Graph ``i`` draws ``n`` uniformly from ``n_range`` and its own seed from
    the stream ``(seed, i)``; only its largest connected component is kept.

    Args:
        count: Number of graphs
        n_range: Inclusive bounds for the sampled node count
        p_rule: Edge probability as a function of ``n``
        seed: Dataset seed
        parallel_jobs: Worker threads

    Returns:
        LocalityReport with graphs in index order
    """
    lo, hi = n_range
    if count < 0 or lo < 1 or hi < lo:
        raise ParameterError(f"Invalid locality dataset: count={count}, n_range={n_range}")
    report = LocalityReport(seed=seed, n_range=(lo, hi))
    if count == 0:
        logger.info("Locality experiment: empty dataset")
        return report

    results: dict[int, GraphLocality] = {}
    with ThreadPoolExecutor(max_workers=max(1, parallel_jobs)) as executor:
        futures = {
            executor.submit(_sample, i, seed, (lo, hi), p_rule, tol): i for i in range(count)
        }
        with click.progressbar(
            as_completed(futures), length=count, label="Sampling graphs"
        ) as completed:
            for future in completed:
                i = futures[future]
                try:
                    results[i] = future.result()
                except DisconnectedGraphError as e:
                    logger.warning(f"Graph {i} skipped: {e}")
                    report.failures.append({"index": i, "error": str(e)})

    report.graphs = [results[i] for i in sorted(results)]
    logger.info(
        f"Locality experiment: {report.count} graphs, edge accuracy {report.edge_accuracy}, "
        f"node accuracy {report.node_accuracy}"
    )
    return report


@dataclass(frozen=True)
class GlobalityWitness:
    """Status of the middle edge and node in ``P_n`` and ``C_n`` with matching neighbourhoods."""

    n: int
    edge: Edge
    node: int
    radius: int
    bridge_in_path: bool
    bridge_in_cycle: bool
    cut_in_path: bool
    cut_in_cycle: bool
    edge_neighborhoods_isomorphic: bool
    node_neighborhoods_isomorphic: bool

    @property
    def holds(self) -> bool:
        return (
            self.bridge_in_path != self.bridge_in_cycle
            and self.cut_in_path != self.cut_in_cycle
            and self.edge_neighborhoods_isomorphic
            and self.node_neighborhoods_isomorphic
        )

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["holds"] = self.holds
        return data


def _ball(nxg: nx.Graph, centers: tuple[int, ...], radius: int) -> nx.Graph:
    ball = nx.compose_all([nx.ego_graph(nxg, c, radius=radius) for c in centers])
    nx.set_node_attributes(ball, {u: u in centers for u in ball}, "anchor")
    return ball


def _same_ball(a: nx.Graph, b: nx.Graph) -> bool:
    return nx.is_isomorphic(a, b, node_match=lambda x, y: x["anchor"] == y["anchor"])


def globality_witness(n: int) -> GlobalityWitness:
    """Compare the middle edge and node of ``P_n`` and ``C_n``.

    The edge ``(n//2 - 1, n//2)`` is a bridge only in the path and node
    ``n//2`` is a cut vertex only in the path, yet their ``n//2 - 2``-hop
    neighbourhoods are isomorphic in both graphs.

    Raises:
        ParameterError: If ``n < 4``
    """
    if n < 4:
        raise ParameterError(f"Globality witness needs n >= 4, got {n}")
    half = n // 2
    edge = (half - 1, half)
    radius = half - 2
    path, cycle = gen_family("path", n), gen_family("cycle", n)
    path_bridges, path_cuts = cut_sets_tarjan(path)
    cycle_bridges, cycle_cuts = cut_sets_tarjan(cycle)
    pnx, cnx = path.to_networkx(), cycle.to_networkx()
    return GlobalityWitness(
        n=n,
        edge=edge,
        node=half,
        radius=radius,
        bridge_in_path=edge in path_bridges,
        bridge_in_cycle=edge in cycle_bridges,
        cut_in_path=half in path_cuts,
        cut_in_cycle=half in cycle_cuts,
        edge_neighborhoods_isomorphic=_same_ball(_ball(pnx, edge, radius), _ball(cnx, edge, radius)),
        node_neighborhoods_isomorphic=_same_ball(_ball(pnx, (half,), radius), _ball(cnx, (half,), radius)),
    )
