"""Tree-based WL refinement and centralized global computation in RL-CONGEST."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Sequence

import numpy as np

from ..congest import (
    RecordCodec,
    RoundLog,
    StepBudget,
    StepKind,
    StepMeter,
    compare_words,
    local_compute,
    metered_dense_rank,
    metered_sort,
    time_n_delta_log_n,
    unbounded_budget,
)
from ..exceptions import DisconnectedGraphError, InputError
from ..graph import AttributedGraph, ColorVector, color_cap, is_connected, validate_colors
from ..utils import get_logger
from .tree import (
    BROADCAST,
    NO_PARENT,
    SpanningTreeState,
    downcast_records,
    flood_bfs,
    node_ids,
    upcast,
)

logger = get_logger()

ROOT = 0


def _edge_words(
    g: AttributedGraph, tree: SpanningTreeState, encode: Callable[[int, int], Sequence[int]]
) -> list[list[int]]:
    """Per-node upcast records: the tree edge to its parent, then the non-tree edges it owns.

    A non-tree edge is owned by its smaller-index endpoint and a tree edge by
    the child, so every edge travels exactly once; the root holds none.
    """
    words: list[list[int]] = [[] for _ in range(g.n)]
    for u in range(g.n):
        if u == tree.root:
            continue
        p = tree.parent[u]
        words[u].extend(encode(u, p))
        for v in g.neighbors(u):
            if v != p and u < v and tree.parent[v] != u:
                words[u].extend(encode(u, v))
    return words


def _require_tree_input(g: AttributedGraph) -> tuple[int, ...]:
    if not is_connected(g):
        raise DisconnectedGraphError("Tree-based algorithms need a connected graph")
    return node_ids(g)


def wl_congest(
    g: AttributedGraph,
    x: Sequence[int],
    w: int,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[ColorVector, RoundLog]:
    """One WL iteration computed at a BFS root and broadcast back.

    Phases: flood a BFS tree from node 0; upcast one
    ``(uid_u, uid_v, x_u)`` record per edge; sort and rank the WL-types at the
    root; downcast one ``(uid, color)`` record per non-root node. Records are
    packed into a single word when the fields fit and sent field by field
    otherwise, as with random IDs on large graphs. Each edge record already
    tells the root the sender's color and one neighbor, so no
    neighbor-exchange round is needed.

    Args:
        g: Connected graph with unique IDs (labels or indices)
        x: Input colors in ``[0, n^2)``
        w: Bandwidth
        budget: Step budget; defaults to ``TIME(nΔ log n)`` with kappa 8

    Returns:
        Tuple of (1-based dense WL colors, combined RoundLog)

    Raises:
        DisconnectedGraphError: If ``g`` is not connected
        BudgetViolation: If the root's local sort exceeds the budget
    """
    x = validate_colors(g, x)
    uids = _require_tree_input(g)
    budget = budget or time_n_delta_log_n()
    if g.n == 1:
        log = RoundLog(width=w)
        local_compute(log, ROOT, lambda meter: meter.step(StepKind.WRITE), budget, 1, 0)
        return (1,), log

    tree, log = flood_bfs(g, ROOT, w, budget, max_rounds, threads)
    edge_codec = RecordCodec.for_maxima((max(uids), max(uids), color_cap(g.n) - 1))
    tokens = _edge_words(g, tree, lambda u, v: edge_codec.encode(uids[u], uids[v], x[u]))
    received, up_log = upcast(g, tree, tokens, w, budget, max_rounds, threads, edge_codec.width)
    log.extend(up_log, "upcast")

    root_uid = uids[ROOT]

    def rank_types(meter: StepMeter) -> dict[int, int]:
        color_of = {root_uid: x[ROOT]}
        adjacency: dict[int, list[int]] = defaultdict(list)
        for record in edge_codec.split(received):
            a, b, xa = edge_codec.decode(record)
            meter.step(StepKind.READ)
            color_of[a] = xa
            adjacency[a].append(b)
            adjacency[b].append(a)
        order = sorted(color_of)
        keys = []
        for uid in order:
            nbr_colors = [color_of[v] for v in adjacency[uid]]
            meter.charge(StepKind.READ, len(nbr_colors))
            keys.append([color_of[uid], *metered_sort(nbr_colors, meter)])
        ranks = metered_dense_rank(keys, meter, compare_words)
        return dict(zip(order, ranks))

    colors_by_uid = local_compute(log, ROOT, rank_types, budget, g.n, g.max_degree)

    reply_codec = RecordCodec.for_maxima((max(uids), g.n))
    records = [reply_codec.encode(uid, c) for uid, c in colors_by_uid.items()]
    kept, down_log = downcast_records(
        g,
        tree,
        records,
        reply_codec.width,
        lambda rec: reply_codec.decode(rec)[0],
        w,
        budget,
        max_rounds,
        threads,
    )
    log.extend(down_log, "downcast")
    colors = tuple(reply_codec.decode(kept[u][0])[1] for u in range(g.n))
    logger.info(
        f"wl_congest: n={g.n} m={g.m} w={w} -> {log.transmission_rounds} rounds, "
        f"{log.total_words} words"
    )
    return colors, log


def global_compute(
    g: AttributedGraph,
    f: Callable[[AttributedGraph], int | Sequence[int]],
    w: int,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[list[int], RoundLog]:
    """Gather the whole graph at a BFS root, apply ``f`` there and broadcast the result.

    The root rebuilds the graph with nodes ordered by ID; when IDs are the
    node indices the rebuilt graph equals ``g``. ``f`` may return one word
    (every node learns it) or one word per node of the rebuilt graph.

    Args:
        g: Connected graph with unique IDs and nonnegative feature words
        f: Centralized function of the rebuilt graph
        w: Bandwidth
        budget: Step budget for the root's reconstruction (unbounded by default)

    Returns:
        Tuple of (the word each node learned, combined RoundLog)

    Raises:
        DisconnectedGraphError: If ``g`` is not connected
        InputError: If a word is negative or ``f`` returns the wrong length
    """
    uids = _require_tree_input(g)
    budget = budget or unbounded_budget()
    if any(v < 0 for feats in g.features for v in feats):
        raise InputError("global_compute packs feature words and needs them nonnegative")
    k = g.feature_width
    max_value = max((v for feats in g.features for v in feats), default=0)
    # (kind, uid, uid-or-feature-index, feature value); kind 0 is an edge, 1 a feature
    codec = RecordCodec.for_maxima((1, max(uids), max(max(uids), k), max_value))

    if g.n == 1:
        tree = SpanningTreeState(ROOT, (NO_PARENT,), (0,), ((),))
        log = RoundLog(width=w)
        received: list[int] = []
    else:
        tree, log = flood_bfs(g, ROOT, w, budget, max_rounds, threads)
        tokens = _edge_words(g, tree, lambda u, v: codec.encode(0, uids[u], uids[v], 0))
        for u in range(g.n):
            if u != ROOT:
                for j, val in enumerate(g.features[u]):
                    tokens[u].extend(codec.encode(1, uids[u], j, val))
        received, up_log = upcast(g, tree, tokens, w, budget, max_rounds, threads, codec.width)
        log.extend(up_log, "upcast")

    def rebuild(meter: StepMeter) -> AttributedGraph:
        fields = [codec.decode(record) for record in codec.split(received)]
        meter.charge(StepKind.READ, len(fields))
        order = sorted({uids[ROOT]} | {a for _, a, _, _ in fields})
        index = {uid: i for i, uid in enumerate(order)}
        feats = [[0] * k for _ in order]
        feats[index[uids[ROOT]]] = list(g.features[ROOT])
        edges = []
        for kind, a, b, val in fields:
            if kind == 0:
                edges.append((index[a], index[b]))
            else:
                feats[index[a]][b] = val
        return AttributedGraph.from_edges(len(order), edges, feats if k else None, order)

    rebuilt = local_compute(log, ROOT, rebuild, budget, g.n, g.max_degree)
    result = f(rebuilt)
    if isinstance(result, (int, np.integer)):
        values = [int(result)] * g.n
        addressed = [BROADCAST]
    else:
        values = [int(v) for v in result]
        if len(values) != g.n:
            raise InputError(f"f returned {len(values)} values for {g.n} nodes")
        addressed = list(rebuilt.labels)
    if any(v < 0 for v in values):
        raise InputError("Results are packed into words and must be nonnegative")

    # (is_broadcast, uid, value) per record
    reply = RecordCodec.for_maxima((1, max(uids), max(values, default=0)))
    if addressed == [BROADCAST]:
        records = [reply.encode(1, 0, values[0])]
    else:
        records = [reply.encode(0, uid, v) for uid, v in zip(addressed, values)]

    def destination(rec: tuple[int, ...]) -> int:
        flag, uid, _ = reply.decode(rec)
        return BROADCAST if flag else uid

    if g.n == 1:
        kept = [list(records)]
    else:
        kept, down_log = downcast_records(
            g, tree, records, reply.width, destination, w, budget, max_rounds, threads
        )
        log.extend(down_log, "downcast")
    learned = [reply.decode(kept[u][0])[2] for u in range(g.n)]
    logger.info(f"global_compute: n={g.n} m={g.m} w={w} -> {log.transmission_rounds} rounds")
    return learned, log
