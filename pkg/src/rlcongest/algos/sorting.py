"""Token sorting over a bitonic comparator network and distinct-key ranking."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import replace

from ..congest import (
    RoundLog,
    StepBudget,
    StepKind,
    StepMeter,
    compare_words,
    local_compute,
    metered_merge,
    metered_sort,
)
from ..exceptions import InputError
from ..graph import AttributedGraph
from ..utils import get_logger
from .routing import Placement, expander_route
from .tokens import (
    KEY_SENTINEL,
    NO_DST,
    NO_HOME,
    Token,
    dummy_token,
    flag_order,
    key_len_of,
    key_order,
)
from .tree import node_ids

logger = get_logger()

Order = Callable[[Token, Token, StepMeter], int]
DUPLICATE = 1


def bitonic_layers(lanes: int) -> list[list[tuple[int, int]]]:
    """Comparator layers of a flip-form bitonic sorter on ``lanes`` lanes.

    Every comparator ``(lo, hi)`` leaves the smaller value on ``lo``. The
    network is built for the next power of two and comparators touching a
    lane ``>= lanes`` are dropped, which is exact because those lanes would
    only ever hold values larger than every real one.
    """
    if lanes < 2:
        return []
    size = 1 << (lanes - 1).bit_length()
    layers = []
    k = 2
    while k <= size:
        flip = [
            (start + off, start + k - 1 - off)
            for start in range(0, size, k)
            for off in range(k // 2)
        ]
        layers.append([(lo, hi) for lo, hi in flip if hi < lanes])
        j = k // 4
        while j >= 1:
            layers.append([(i, i | j) for i in range(size) if not i & j and (i | j) < lanes])
            j //= 2
        k *= 2
    return [layer for layer in layers if layer]


class _LaneMap:
    """Lanes are node-ID ranks; lane i lives on the node with the i-th smallest ID."""

    def __init__(self, g: AttributedGraph):
        self.uids = node_ids(g)
        self.nodes = sorted(range(g.n), key=lambda u: self.uids[u])

    def node(self, lane: int) -> int:
        return self.nodes[lane]

    def uid(self, lane: int) -> int:
        return self.uids[self.nodes[lane]]

    def __len__(self) -> int:
        return len(self.nodes)


class _Runner:
    """Shared plumbing for multi-phase token procedures: routing plus local steps."""

    def __init__(self, g, w, L, backend, budget, max_rounds, threads, label):
        self.g = g
        self.w = w
        self.L = L
        self.backend = backend
        self.budget = budget
        self.max_rounds = max_rounds
        self.threads = threads
        self.label = label
        self.lanes = _LaneMap(g)
        self.log = RoundLog(width=w)

    def route(self, placement: Placement, phase: str) -> Placement:
        moved, rlog = expander_route(
            self.g,
            placement,
            self.w,
            self.L,
            self.backend,
            self.budget,
            self.max_rounds,
            self.threads,
        )
        self.log.extend(rlog, f"{self.label}:{phase}")
        return moved

    def local(self, lane: int, fn: Callable[[StepMeter], object]):
        return local_compute(
            self.log, self.lanes.node(lane), fn, self.budget, self.g.n, self.g.max_degree
        )

    def route_between_lanes(
        self, outgoing: dict[int, tuple[int, list[Token]]], phase: str
    ) -> list[list[Token]]:
        """Send ``outgoing[src_lane] = (dst_lane, tokens)``; return tokens received per lane."""
        placement: Placement = [[] for _ in range(self.g.n)]
        for lane, (target, tokens) in outgoing.items():
            dst = self.lanes.uid(target)
            placement[self.lanes.node(lane)] = [replace(t, dst=dst) for t in tokens]
        moved = self.route(placement, phase)
        return [moved[self.lanes.node(lane)] for lane in range(len(self.lanes))]


def _sort_lanes(
    runner: _Runner, blocks: list[list[Token]], order: Order, key_len: int
) -> list[list[Token]]:
    """Sort padded lane blocks so lane order implies token order; returns padded blocks."""
    L = runner.L
    lanes = len(runner.lanes)
    padded = []
    for lane in range(lanes):
        block = blocks[lane] + [dummy_token(key_len)] * (L - len(blocks[lane]))
        padded.append(runner.local(lane, lambda m, b=block: metered_sort(b, m, order)))

    for depth, layer in enumerate(bitonic_layers(lanes)):
        received = runner.route_between_lanes(
            {lo: (hi, padded[lo]) for lo, hi in layer}, f"layer{depth}-up"
        )
        returning = {}
        for lo, hi in layer:

            def merge_split(meter: StepMeter, lo=lo, hi=hi):
                incoming = metered_sort(received[hi], meter, order)
                return metered_merge(incoming, padded[hi], meter, order)

            merged = runner.local(hi, merge_split)
            padded[hi] = merged[L:]
            returning[hi] = (lo, merged[:L])
        back = runner.route_between_lanes(returning, f"layer{depth}-down")
        for lo, _ in layer:
            padded[lo] = runner.local(lo, lambda m, b=back[lo]: metered_sort(b, m, order))
    return padded


def _check_load(placement: Sequence[Sequence[Token]], g: AttributedGraph, L: int) -> None:
    if len(placement) != g.n:
        raise InputError(f"Expected {g.n} token lists, got {len(placement)}")
    for u, tokens in enumerate(placement):
        if len(tokens) > L:
            raise InputError(f"Node {u} holds {len(tokens)} tokens > L={L}")


def expander_sort(
    g: AttributedGraph,
    placement: Sequence[Sequence[Token]],
    w: int,
    L: int,
    backend: str = "tree",
    order: Order = key_order,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[Placement, RoundLog]:
    """Redistribute tokens so that node-ID order implies token order.

    Each node's block is padded to ``L`` with dummy tokens and the blocks run
    through a bitonic network over ID-ranked lanes. A comparator routes the
    lower lane's block to the upper lane, which merges, keeps the larger half
    and routes the smaller half back.

    Args:
        g: Communication graph with unique IDs
        placement: Tokens held by each node, at most ``L`` each
        w: Bandwidth
        L: Tokens per node
        backend: Routing backend for every comparator
        order: Token comparison; ``(key, tag, src)`` by default

    Returns:
        Tuple of (sorted placement with dummies dropped, combined RoundLog)

    Raises:
        InputError: If a node holds more than ``L`` tokens
    """
    _check_load(placement, g, L)
    key_len = key_len_of(placement)
    runner = _Runner(g, w, L, backend, budget, max_rounds, threads, "sort")
    blocks = [list(placement[runner.lanes.node(lane)]) for lane in range(g.n)]
    padded = _sort_lanes(runner, blocks, order, key_len)
    result: Placement = [[] for _ in range(g.n)]
    for lane, block in enumerate(padded):
        result[runner.lanes.node(lane)] = [replace(t, dst=NO_DST) for t in block if not t.is_dummy]
    logger.debug(
        f"Sorted {sum(map(len, placement))} tokens on {g.n} lanes in "
        f"{runner.log.transmission_rounds} rounds"
    )
    return result, runner.log


def _marker(key: tuple[int, ...], lane: int, uid: int, rank: int = -1, flag: int = 0) -> Token:
    return Token(key, lane, uid, rank=rank, flag=flag)


def token_rank(
    g: AttributedGraph,
    placement: Sequence[Sequence[Token]],
    w: int,
    L: int,
    backend: str = "tree",
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[Placement, RoundLog]:
    """Give every token the number of distinct keys strictly smaller than its own.

    Pipeline: sort by (key, tag); mark a token as duplicate when its key
    equals its predecessor's, so among equal keys the smallest tag stays
    unmarked; remember each token's lane and re-sort with duplicates last,
    where an unmarked token's position is its rank; route tokens back to
    their remembered lanes; copy each run's rank to its duplicates with a
    doubling scan across lanes; finally return every token to its source.

    Args:
        g: Communication graph with unique IDs
        placement: Tokens per node; each token's ``src`` must be its holder's ID
        w: Bandwidth
        L: Tokens per node

    Returns:
        Tuple of (tokens back at their sources with ranks set, combined RoundLog)

    Raises:
        InputError: If a node holds more than ``L`` tokens or a ``src`` is wrong
    """
    _check_load(placement, g, L)
    key_len = key_len_of(placement)
    uids = node_ids(g)
    for u, tokens in enumerate(placement):
        if any(t.src != uids[u] for t in tokens):
            raise InputError(f"Tokens at node {u} must carry src={uids[u]}")
    runner = _Runner(g, w, L, backend, budget, max_rounds, threads, "rank")
    lanes = runner.lanes
    n = len(lanes)
    blank = (KEY_SENTINEL,) * key_len
    if not any(placement):
        return [[] for _ in range(g.n)], runner.log

    start = [
        [replace(t, flag=0, rank=-1, home=NO_HOME) for t in placement[lanes.node(lane)]]
        for lane in range(n)
    ]
    sorted_blocks = [
        [t for t in block if not t.is_dummy]
        for block in _sort_lanes(runner, start, key_order, key_len)
    ]

    # predecessor keys across lane boundaries
    markers = runner.route_between_lanes(
        {
            lane: (lane + 1, [_marker(block[-1].key, lane, lanes.uid(lane))])
            for lane, block in enumerate(sorted_blocks)
            if block and lane + 1 < n
        },
        "boundary",
    )
    for lane in range(n):

        def mark(meter: StepMeter, lane=lane):
            prev = markers[lane][0].key if markers[lane] else None
            out = []
            for t in sorted_blocks[lane]:
                same = prev is not None and compare_words(prev, t.key, meter) == 0
                out.append(replace(t, flag=DUPLICATE if same else 0, home=lanes.uid(lane)))
                prev = t.key
            return out

        sorted_blocks[lane] = runner.local(lane, mark)

    by_flag = _sort_lanes(runner, sorted_blocks, flag_order, key_len)
    ranked: list[list[Token]] = []
    for lane, block in enumerate(by_flag):
        ranked.append(
            [
                replace(t, rank=lane * L + pos) if t.flag == 0 else t
                for pos, t in enumerate(block)
                if not t.is_dummy
            ]
        )
        runner.local(lane, lambda m, k=len(block): m.charge(StepKind.WRITE, k))

    # back to the lanes of the key-sorted order
    placement_home: Placement = [[] for _ in range(g.n)]
    for lane, block in enumerate(ranked):
        placement_home[lanes.node(lane)] = [replace(t, dst=t.home) for t in block]
    returned = runner.route(placement_home, "revert")
    blocks = [
        runner.local(lane, lambda m, b=returned[lanes.node(lane)]: metered_sort(b, m, key_order))
        for lane in range(n)
    ]

    # within-lane fill, then an inclusive doubling scan of (has_head, last head rank)
    summary: list[tuple[int, int]] = []
    for lane in range(n):
        carry = -1
        filled = []
        for t in blocks[lane]:
            if t.flag == 0:
                carry = t.rank
            elif carry >= 0:
                t = replace(t, rank=carry)
            filled.append(t)
        blocks[lane] = filled
        summary.append((1, carry) if carry >= 0 else (0, -1))

    def carry_marker(lane: int) -> list[Token]:
        has_head, rank = summary[lane]
        return [_marker(blank, lane, lanes.uid(lane), rank, has_head)]

    stride = 1
    while stride < n:
        incoming = runner.route_between_lanes(
            {lane: (lane + stride, carry_marker(lane)) for lane in range(n - stride)},
            f"scan{stride}",
        )
        summary = [
            (incoming[lane][0].flag, incoming[lane][0].rank)
            if incoming[lane] and not summary[lane][0]
            else summary[lane]
            for lane in range(n)
        ]
        stride *= 2

    previous = runner.route_between_lanes(
        {lane: (lane + 1, carry_marker(lane)) for lane in range(n - 1)}, "shift"
    )
    final: Placement = [[] for _ in range(g.n)]
    for lane in range(n):
        head = previous[lane][0].rank if previous[lane] else -1
        final[lanes.node(lane)] = [
            replace(t, rank=head if t.rank < 0 else t.rank, dst=t.src, home=NO_HOME, flag=0)
            for t in blocks[lane]
        ]
    result = runner.route(final, "return")
    logger.debug(
        f"Ranked {sum(map(len, placement))} tokens in {runner.log.transmission_rounds} rounds"
    )
    return result, runner.log
