"""BFS spanning trees plus pipelined convergecast and broadcast over them."""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from ..congest import NodeContext, NodeProgram, RecordCodec, RoundLog, StepBudget, StepKind, run
from ..exceptions import InputError, SimulationTimeout
from ..graph import AttributedGraph
from ..utils import get_logger

logger = get_logger()

NO_PARENT = -1
BROADCAST = -1


@dataclass(frozen=True)
class SpanningTreeState:
    """Rooted spanning tree: parent pointers, hop depths and child lists by node index."""

    root: int
    parent: tuple[int, ...]
    depth: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]

    @property
    def height(self) -> int:
        return max(self.depth, default=0)

    @property
    def n(self) -> int:
        return len(self.parent)

    def path_to_root(self, u: int) -> list[int]:
        path = [u]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path

    def validate(self, g: AttributedGraph) -> None:
        """Check parent pointers are graph edges with consistent depths.

        Raises:
            InputError: If the tree does not span ``g`` correctly
        """
        if self.n != g.n or self.parent[self.root] != NO_PARENT or self.depth[self.root] != 0:
            raise InputError("Tree does not match the graph or its root")
        for u in range(g.n):
            if u == self.root:
                continue
            p = self.parent[u]
            if p == NO_PARENT or not g.has_edge(u, p):
                raise InputError(f"Node {u} has no valid parent edge")
            if self.depth[u] != self.depth[p] + 1:
                raise InputError(f"Depth of node {u} is not its parent's plus one")
            if u not in self.children[p]:
                raise InputError(f"Node {u} missing from the child list of {p}")


@dataclass
class _FloodState:
    depth: int | None = None
    parent: int = NO_PARENT
    children: list[int] = field(default_factory=list)


class FloodProgram(NodeProgram):
    """Flooding from ``root``; each message is ``2*depth + is_parent_flag``.

    A node adopts the smallest-index sender of its first non-empty inbox as
    parent and tells exactly that neighbor so through the flag bit.
    """

    wakes_on_message = True
    requires_connected = False

    def __init__(self, root: int):
        self.root = root

    def init(self, ctx: NodeContext) -> _FloodState:
        return _FloodState()

    def on_round(self, ctx, state, inbox):
        outbox = {}
        for sender, words in inbox.items():
            ctx.meter.charge(StepKind.READ, len(words))
            if words[0] & 1:
                state.children.append(sender)
        if state.depth is None:
            if ctx.node == self.root:
                state.depth = 0
            elif inbox:
                state.parent = min(inbox)
                state.depth = inbox[state.parent][0] // 2 + 1
            if state.depth is not None:
                for v in ctx.neighbors:
                    outbox[v] = [2 * state.depth + (1 if v == state.parent else 0)]
                ctx.meter.charge(StepKind.WRITE, len(outbox))
        return state, outbox, True


def flood_bfs(
    g: AttributedGraph,
    root: int = 0,
    w: int = 1,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[SpanningTreeState, RoundLog]:
    """Build a BFS tree rooted at ``root`` by flooding.

    Transmission rounds equal ``eccentricity(root) + 1`` on graphs with at
    least one edge: the last layer reports to its parents one round after
    being reached.

    Raises:
        InputError: If ``root`` is not a node
        SimulationTimeout: If some node is never reached
    """
    if not 0 <= root < g.n:
        raise InputError(f"Root {root} is not a node of a graph with {g.n} nodes")
    states, log = run(g, FloodProgram(root), w, budget, max_rounds, threads)
    unreached = [u for u, s in enumerate(states) if s.depth is None]
    if unreached or log.timed_out:
        raise SimulationTimeout(
            f"Flooding from {root} never reached {len(unreached)} node(s)", log
        )
    tree = SpanningTreeState(
        root=root,
        parent=tuple(s.parent for s in states),
        depth=tuple(s.depth for s in states),
        children=tuple(tuple(sorted(s.children)) for s in states),
    )
    logger.debug(f"BFS tree from {root}: height {tree.height}, {log.transmission_rounds} rounds")
    return tree, log


@dataclass
class _UpcastState:
    queue: deque[int]
    partial: dict[int, list[int]] = field(default_factory=dict)


class UpcastProgram(NodeProgram):
    """Pipelined convergecast of ``record_width``-word records toward the root.

    Each link carries one sender's records back to back, so a node reassembles
    every child's stream separately and queues only whole records. Up to ``w``
    queued words go to the parent per round.
    """

    wakes_on_message = True

    def __init__(
        self, tree: SpanningTreeState, tokens: Sequence[Sequence[int]], record_width: int = 1
    ):
        self.tree = tree
        self.tokens = tokens
        self.record_width = record_width

    def init(self, ctx: NodeContext) -> _UpcastState:
        return _UpcastState(queue=deque(self.tokens[ctx.node]))

    def on_round(self, ctx, state, inbox):
        for child, words in inbox.items():
            ctx.meter.charge(StepKind.READ, len(words))
            buf = state.partial.setdefault(child, [])
            buf.extend(words)
            whole = len(buf) - len(buf) % self.record_width
            if whole:
                state.queue.extend(buf[:whole])
                del buf[:whole]
        if ctx.node == self.tree.root:
            return state, {}, True
        batch = [state.queue.popleft() for _ in range(min(ctx.width, len(state.queue)))]
        ctx.meter.charge(StepKind.WRITE, len(batch))
        outbox = {self.tree.parent[ctx.node]: batch} if batch else {}
        return state, outbox, not state.queue


def upcast(
    g: AttributedGraph,
    tree: SpanningTreeState,
    tokens: Sequence[Sequence[int]],
    w: int,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
    record_width: int = 1,
) -> tuple[list[int], RoundLog]:
    """Collect every node's words at the root, whole records at a time.

    Each node sends its own words first, then relays complete records in
    arrival order, so transmission rounds are at most ``height - 1 + ceil(M / w)``
    plus the words a relay waits on to complete a record.

    Args:
        g: Graph the tree spans
        tree: Rooted spanning tree
        tokens: Word list held by each node, a whole number of records
        w: Bandwidth
        record_width: Words per record; records arrive at the root unsplit

    Returns:
        Tuple of (all words in root arrival order, record-aligned, RoundLog)
    """
    if len(tokens) != g.n:
        raise InputError(f"Expected {g.n} token lists, got {len(tokens)}")
    if record_width < 1:
        raise InputError(f"Record width must be positive, got {record_width}")
    for u, words in enumerate(tokens):
        if len(words) % record_width:
            raise InputError(f"Node {u} holds {len(words)} words, not whole {record_width}-word records")
    states, log = run(g, UpcastProgram(tree, tokens, record_width), w, budget, max_rounds, threads)
    if log.timed_out:
        raise SimulationTimeout("Upcast did not drain before max_rounds", log)
    return list(states[tree.root].queue), log


@dataclass
class _DowncastState:
    pending: deque[int]
    buffer: list[int] = field(default_factory=list)
    kept: list[tuple[int, ...]] = field(default_factory=list)


class DowncastProgram(NodeProgram):
    """Pipelined broadcast of a record stream from the root down the tree.

    Records are ``record_width`` words. ``destination(record)`` returns the
    addressee's ID, or ``BROADCAST`` when every node keeps the record.
    """

    wakes_on_message = True

    def __init__(
        self,
        tree: SpanningTreeState,
        stream: Sequence[int],
        record_width: int,
        destination: Callable[[tuple[int, ...]], int],
    ):
        self.tree = tree
        self.stream = stream
        self.record_width = record_width
        self.destination = destination

    def init(self, ctx: NodeContext) -> _DowncastState:
        if ctx.node == self.tree.root:
            return _DowncastState(pending=deque(self.stream))
        return _DowncastState(pending=deque())

    def on_round(self, ctx, state, inbox):
        for words in inbox.values():
            ctx.meter.charge(StepKind.READ, len(words))
            state.pending.extend(words)
            state.buffer.extend(words)
        while len(state.buffer) >= self.record_width:
            record = tuple(state.buffer[: self.record_width])
            del state.buffer[: self.record_width]
            ctx.meter.step(StepKind.COMPARE)
            if self.destination(record) in (ctx.uid, BROADCAST):
                state.kept.append(record)
        children = self.tree.children[ctx.node]
        if not children:
            state.pending.clear()
            return state, {}, True
        batch = [state.pending.popleft() for _ in range(min(ctx.width, len(state.pending)))]
        ctx.meter.charge(StepKind.WRITE, len(batch) * len(children))
        outbox = {c: list(batch) for c in children} if batch else {}
        return state, outbox, not state.pending


def downcast_records(
    g: AttributedGraph,
    tree: SpanningTreeState,
    records: Sequence[Sequence[int]],
    record_width: int,
    destination: Callable[[tuple[int, ...]], int],
    w: int,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[list[list[tuple[int, ...]]], RoundLog]:
    """Broadcast fixed-width records from the root; each node keeps those addressed to it.

    Records addressed to the root's own ID stay at the root without being
    sent. Transmission rounds are at most ``height - 1 + ceil(M * record_width / w)``.

    Returns:
        Tuple of (records kept per node, RoundLog)
    """
    root_uid = node_ids(g)[tree.root]
    stream: list[int] = []
    at_root: list[tuple[int, ...]] = []
    for rec in records:
        rec = tuple(rec)
        if len(rec) != record_width:
            raise InputError(f"Record {rec} is not {record_width} words wide")
        dst = destination(rec)
        if dst in (root_uid, BROADCAST):
            at_root.append(rec)
        if dst != root_uid:
            stream.extend(rec)
    program = DowncastProgram(tree, stream, record_width, destination)
    states, log = run(g, program, w, budget, max_rounds, threads)
    if log.timed_out:
        raise SimulationTimeout("Downcast did not finish before max_rounds", log)
    kept = [list(s.kept) for s in states]
    kept[tree.root] = at_root
    return kept, log


def downcast(
    g: AttributedGraph,
    tree: SpanningTreeState,
    messages: Sequence[tuple[int, int]],
    w: int,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[list[list[int]], RoundLog]:
    """Deliver ``(dst_id, payload)`` messages from the root, one packed record each.

    Args:
        g: Graph the tree spans
        tree: Rooted spanning tree
        messages: Addressee ID and nonnegative payload word per message
        w: Bandwidth

    Returns:
        Tuple of (payloads delivered per node in message order, RoundLog)
    """
    uids = node_ids(g)
    known = set(uids)
    index_of = {uid: u for u, uid in enumerate(uids)}
    for dst, _ in messages:
        if dst not in known:
            raise InputError(f"Message addressed to unknown ID {dst}")
    codec = RecordCodec.for_maxima((max(uids, default=0), max((p for _, p in messages), default=0)))
    records = [codec.encode(dst, payload) for dst, payload in messages]
    kept, log = downcast_records(
        g, tree, records, codec.width, lambda rec: codec.decode(rec)[0], w, budget, max_rounds, threads
    )
    delivered = [[codec.decode(rec)[1] for rec in recs] for recs in kept]
    return delivered, log


def node_ids(g: AttributedGraph) -> tuple[int, ...]:
    """Per-node IDs (labels when assigned, indices otherwise).

    Raises:
        InputError: If the labels are not unique nonnegative words
    """
    uids = g.labels if g.labels is not None else tuple(range(g.n))
    if len(set(uids)) != len(uids) or any(uid < 0 for uid in uids):
        raise InputError("Node IDs must be unique and nonnegative")
    return uids
