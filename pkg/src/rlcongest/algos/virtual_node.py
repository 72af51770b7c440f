"""WL refinement through a virtual node adjacent to every original node."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from ..congest import (
    NodeContext,
    NodeProgram,
    RoundLog,
    StepBudget,
    StepKind,
    compare_words,
    metered_dense_rank,
    metered_sort,
    run,
    time_n_delta_log_n,
)
from ..exceptions import InputError, SimulationTimeout
from ..graph import AttributedGraph, ColorVector, validate_colors
from ..graph.transforms import VIRTUAL_MARKER
from ..utils import get_logger

logger = get_logger()

# Sent by the virtual node in round 1 so original nodes can tell it apart.
ANNOUNCE = -1


@dataclass
class _MemberState:
    color: int
    hub: int | None = None
    upload: list[int] = field(default_factory=list)
    result: int | None = None


@dataclass
class _HubState:
    streams: dict[int, list[int]] = field(default_factory=dict)
    replied: bool = False


class VirtualNodeWlProgram(NodeProgram):
    """Original nodes upload ``[degree, color, sorted neighbor colors]``; the hub ranks them.

    Round 1: original nodes send their color to every neighbor while the hub
    announces itself. Then each node streams its record to the hub, ``w``
    words per round. Once every record is complete the hub sorts the keys and
    replies with one color word per node.
    """

    wakes_on_message = True

    def __init__(self, hub: int, colors: Sequence[int]):
        self.hub = hub
        self.colors = colors

    def init(self, ctx: NodeContext):
        if ctx.node == self.hub:
            return _HubState()
        return _MemberState(color=self.colors[ctx.node])

    def on_round(self, ctx, state, inbox):
        if ctx.node == self.hub:
            return self._hub_round(ctx, state, inbox)
        return self._member_round(ctx, state, inbox)

    def _member_round(self, ctx, state: _MemberState, inbox):
        if ctx.round == 1:
            return state, {v: [state.color] for v in ctx.neighbors}, True
        if state.hub is None:
            neighbor_colors = []
            for sender, words in inbox.items():
                ctx.meter.step(StepKind.READ)
                if words[0] == ANNOUNCE:
                    state.hub = sender
                else:
                    neighbor_colors.append(words[0])
            if state.hub is None:
                raise InputError(f"Node {ctx.node} never heard from a virtual node")
            ordered = metered_sort(neighbor_colors, ctx.meter)
            state.upload = [len(ordered), state.color, *ordered]
        elif self.hub in inbox:
            ctx.meter.step(StepKind.READ)
            state.result = inbox[self.hub][0]
            return state, {}, True
        batch, state.upload = state.upload[: ctx.width], state.upload[ctx.width :]
        ctx.meter.charge(StepKind.WRITE, len(batch))
        return state, ({state.hub: batch} if batch else {}), not state.upload

    def _hub_round(self, ctx, state: _HubState, inbox):
        if ctx.round == 1:
            return state, {v: [ANNOUNCE] for v in ctx.neighbors}, True
        if ctx.round == 2:
            # round-1 color broadcasts; records start arriving next round
            return state, {}, True
        for sender, words in inbox.items():
            ctx.meter.charge(StepKind.READ, len(words))
            state.streams.setdefault(sender, []).extend(words)
        complete = len(state.streams) == len(ctx.neighbors) and all(
            len(s) == s[0] + 2 for s in state.streams.values()
        )
        if not complete or state.replied:
            return state, {}, True
        senders = sorted(state.streams)
        keys = [state.streams[u][1:] for u in senders]
        ranks = metered_dense_rank(keys, ctx.meter, compare_words)
        state.replied = True
        return state, {u: [r] for u, r in zip(senders, ranks)}, True


def _hub_of(g: AttributedGraph) -> int:
    hub = g.virtual_node
    if hub is None or g.feature_width == 0 or g.features[hub][-1] != VIRTUAL_MARKER:
        raise InputError("Graph has no marked virtual node; build it with add_virtual_node")
    return hub


def wl_virtual_node(
    g: AttributedGraph,
    x: Sequence[int],
    w: int,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[ColorVector, RoundLog]:
    """One WL iteration on the original nodes of a graph with a virtual node.

    Transmission rounds are ``2 + ceil((Δ + 2) / w)`` where Δ is the original
    maximum degree, independent of the diameter.

    Args:
        g: Output of ``add_virtual_node``
        x: Colors of the original nodes
        w: Bandwidth
        budget: Step budget; defaults to ``TIME(nΔ log n)`` with kappa 8

    Returns:
        Tuple of (1-based dense colors of the original nodes, RoundLog)

    Raises:
        InputError: If the virtual node or its marker is missing
    """
    hub = _hub_of(g)
    original = g.original()
    x = validate_colors(original, x)
    if original.n == 0:
        return (), RoundLog(width=w)
    colors = list(x)
    colors.insert(hub, 0)
    program = VirtualNodeWlProgram(hub, colors)
    states, log = run(g, program, w, budget or time_n_delta_log_n(), max_rounds, threads)
    if log.timed_out:
        raise SimulationTimeout("Virtual-node WL did not finish", log)
    result = tuple(s.result for u, s in enumerate(states) if u != hub)
    logger.info(
        f"wl_virtual_node: n={original.n} Δ={original.max_degree} w={w} -> "
        f"{log.transmission_rounds} rounds"
    )
    return result, log
