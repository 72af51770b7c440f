"""Token routing: every token travels to the node whose ID equals its ``dst``."""

from __future__ import annotations

import bisect
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..config import BACKENDS
from ..congest import NodeContext, NodeProgram, RoundLog, StepBudget, StepKind, run
from ..exceptions import InputError, ParameterError, SimulationTimeout
from ..graph import AttributedGraph, hop_distances
from ..utils import get_logger
from .tokens import TRAILER_WORDS, Token, dst_field, key_len_of
from .tree import SpanningTreeState, downcast_records, flood_bfs, node_ids, upcast

logger = get_logger()

Placement = list[list[Token]]


@lru_cache(maxsize=8)
def routing_table(g: AttributedGraph) -> tuple[tuple[int, ...], ...]:
    """``next_hop[u][t]``: smallest-index neighbor of ``u`` on a shortest path to ``t``.

    Computed centrally from all-pairs BFS distances as preprocessing.
    """
    dist = hop_distances(g)
    table = []
    for u in range(g.n):
        row = []
        for t in range(g.n):
            if t == u or np.isinf(dist[u, t]):
                row.append(-1)
                continue
            row.append(next(v for v in g.neighbors(u) if dist[v, t] == dist[u, t] - 1))
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=8)
def routing_tree(g: AttributedGraph) -> SpanningTreeState:
    """BFS tree from node 0 reused by every tree-backend route on ``g``."""
    tree, _ = flood_bfs(g, 0, 1)
    return tree


def validate_instance(
    g: AttributedGraph, placement: Sequence[Sequence[Token]], L: int
) -> dict[int, int]:
    """Check the routing-instance limits and map IDs to node indices.

    Raises:
        ParameterError: If ``L < 1``
        InputError: If a node holds, or a destination receives, more than ``L`` tokens
    """
    if L < 1:
        raise ParameterError(f"Token load L must be at least 1, got {L}")
    if len(placement) != g.n:
        raise InputError(f"Expected {g.n} token lists, got {len(placement)}")
    index_of = {uid: u for u, uid in enumerate(node_ids(g))}
    for u, tokens in enumerate(placement):
        if len(tokens) > L:
            raise InputError(f"Node {u} holds {len(tokens)} tokens > L={L}")
    per_dst = Counter(t.dst for tokens in placement for t in tokens)
    for dst, count in per_dst.items():
        if dst not in index_of:
            raise InputError(f"Token destination {dst} is not a node ID")
        if count > L:
            raise InputError(f"{count} tokens share destination {dst} > L={L}")
    key_len_of(placement)
    return index_of


@dataclass
class _RouterState:
    queues: dict[int, list[tuple[tuple[int, int], int, list[int]]]] = field(default_factory=dict)
    sending: dict[int, list[int]] = field(default_factory=dict)
    buffers: dict[int, list[int]] = field(default_factory=dict)
    arrived: list[list[int]] = field(default_factory=list)
    seq: int = 0


class DirectRoutingProgram(NodeProgram):
    """Store-and-forward along shortest paths, ``w`` words per edge direction per round.

    Each edge serves whole records one after another; among waiting records
    the smallest ``(tag, src)`` goes first and a started record is never
    pre-empted.
    """

    wakes_on_message = True

    def __init__(
        self,
        records: Sequence[Sequence[list[int]]],
        next_hop: tuple[tuple[int, ...], ...],
        index_of: dict[int, int],
        key_len: int,
    ):
        self.records = records
        self.next_hop = next_hop
        self.index_of = index_of
        self.key_len = key_len
        self.width = key_len + TRAILER_WORDS
        self.dst_at = dst_field(key_len)

    def _accept(self, ctx: NodeContext, state: _RouterState, record: list[int]) -> None:
        target = self.index_of[record[self.dst_at]]
        ctx.meter.step(StepKind.COMPARE)
        if target == ctx.node:
            state.arrived.append(record)
            return
        hop = self.next_hop[ctx.node][target]
        priority = (record[self.key_len], record[self.key_len + 1])
        state.seq += 1
        bisect.insort(state.queues.setdefault(hop, []), (priority, state.seq, record))

    def init(self, ctx: NodeContext) -> _RouterState:
        state = _RouterState()
        for record in self.records[ctx.node]:
            self._accept(ctx, state, list(record))
        return state

    def on_round(self, ctx, state, inbox):
        for sender, words in inbox.items():
            ctx.meter.charge(StepKind.READ, len(words))
            buf = state.buffers.setdefault(sender, [])
            buf.extend(words)
            while len(buf) >= self.width:
                record, buf[:] = buf[: self.width], buf[self.width :]
                self._accept(ctx, state, record)
        outbox = {}
        for hop in sorted(set(state.queues) | set(state.sending)):
            room = ctx.width
            batch: list[int] = []
            while room:
                current = state.sending.get(hop)
                if not current:
                    queue = state.queues.get(hop)
                    if not queue:
                        break
                    current = state.sending[hop] = list(queue.pop(0)[2])
                take = current[:room]
                del current[:room]
                batch.extend(take)
                room -= len(take)
            if batch:
                ctx.meter.charge(StepKind.WRITE, len(batch))
                outbox[hop] = batch
        busy = any(state.queues.values()) or any(state.sending.values())
        return state, outbox, not busy


def _split(placement: Sequence[Sequence[Token]], uids: Sequence[int]) -> tuple[Placement, Placement]:
    staying: Placement = []
    moving: Placement = []
    for u, tokens in enumerate(placement):
        staying.append([t for t in tokens if t.dst == uids[u]])
        moving.append([t for t in tokens if t.dst != uids[u]])
    return staying, moving


def expander_route(
    g: AttributedGraph,
    placement: Sequence[Sequence[Token]],
    w: int,
    L: int,
    backend: str = "tree",
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[Placement, RoundLog]:
    """Move every token to the node whose ID is its ``dst``.

    Tokens already at their destination do not move. The ``tree`` backend
    gathers all moving tokens at a BFS root and broadcasts them back down;
    the ``direct`` backend forwards each token along a shortest path. BFS
    trees and routing tables are preprocessing and cost no rounds.

    Args:
        g: Communication graph (overlay edges included)
        placement: Tokens held by each node
        w: Bandwidth
        L: Maximum tokens per node and per destination
        backend: ``"tree"`` or ``"direct"``

    Returns:
        Tuple of (tokens held by each node afterwards, RoundLog)

    Raises:
        InputError: If the instance exceeds ``L``
        ParameterError: If the backend is unknown
    """
    if backend not in BACKENDS:
        raise ParameterError(f"Unknown routing backend {backend!r}; expected one of {BACKENDS}")
    index_of = validate_instance(g, placement, L)
    uids = node_ids(g)
    key_len = key_len_of(placement)
    staying, moving = _split(placement, uids)
    if not any(moving):
        return staying, RoundLog(width=w)

    if backend == "tree":
        tree = routing_tree(g)
        words = [[word for t in tokens for word in t.to_words()] for tokens in moving]
        width = key_len + TRAILER_WORDS
        collected, log = upcast(g, tree, words, w, budget, max_rounds, threads, width)
        records = [collected[i : i + width] for i in range(0, len(collected), width)]
        at = dst_field(key_len)
        kept, down_log = downcast_records(
            g, tree, records, width, lambda rec: rec[at], w, budget, max_rounds, threads
        )
        log.extend(down_log, "downcast")
        arrived = kept
    else:
        records = [[t.to_words() for t in tokens] for tokens in moving]
        program = DirectRoutingProgram(records, routing_table(g), index_of, key_len)
        states, log = run(g, program, w, budget, max_rounds, threads)
        if log.timed_out:
            raise SimulationTimeout("Direct routing did not deliver every token", log)
        arrived = [s.arrived for s in states]

    result = [
        staying[u] + [Token.from_words(rec, key_len) for rec in arrived[u]] for u in range(g.n)
    ]
    logger.debug(
        f"Routed {sum(map(len, moving))} tokens via {backend} in {log.transmission_rounds} rounds"
    )
    return result, log
