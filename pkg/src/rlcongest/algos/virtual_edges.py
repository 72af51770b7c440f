"""WL refinement on a graph overlaid with random virtual edges, via token ranking."""

from __future__ import annotations

from collections.abc import Sequence

from ..congest import (
    NodeContext,
    NodeProgram,
    RoundLog,
    StepBudget,
    StepKind,
    metered_sort,
    run,
    time_delta_polylog,
)
from ..exceptions import InputError, SimulationTimeout
from ..graph import AttributedGraph, ColorVector, validate_colors
from ..utils import get_logger
from .sorting import token_rank
from .tokens import Token, pad_key
from .tree import node_ids

logger = get_logger()


class ColorExchangeProgram(NodeProgram):
    """Send the own color over original edges, then sort what came back."""

    def __init__(self, colors: Sequence[int], original: tuple[tuple[int, ...], ...]):
        self.colors = colors
        self.original = original

    def init(self, ctx: NodeContext) -> list[int]:
        return []

    def on_round(self, ctx, state, inbox):
        if ctx.round == 1:
            ctx.meter.charge(StepKind.WRITE, len(self.original[ctx.node]))
            return state, {v: [self.colors[ctx.node]] for v in self.original[ctx.node]}, False
        received = [words[0] for v, words in inbox.items()]
        ctx.meter.charge(StepKind.READ, len(received))
        return metered_sort(received, ctx.meter), {}, True


def wl_virtual_edges(
    g: AttributedGraph,
    x: Sequence[int],
    w: int,
    L: int = 1,
    backend: str = "tree",
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[ColorVector, RoundLog]:
    """One WL iteration over original edges, communicating over original plus overlay edges.

    Each node builds a token whose key is its WL-type padded to ``2Δ + 2``
    words, with ``tag = src = ID``. Ranking the tokens gives every node the
    number of distinct smaller types; the new color is that rank plus one.

    Args:
        g: Output of ``add_virtual_edges``
        x: Colors of all nodes
        w: Bandwidth
        L: Token load per node for the routing procedures
        backend: Routing backend
        budget: Step budget; defaults to ``TIME(Δ polylog n)`` with kappa 8

    Returns:
        Tuple of (1-based dense colors, combined RoundLog)

    Raises:
        InputError: If the graph carries no overlay edges
    """
    if not g.virtual_edges:
        raise InputError("Graph has no overlay edges; build it with add_virtual_edges")
    x = validate_colors(g, x)
    uids = node_ids(g)
    budget = budget or time_delta_polylog()
    original = g.original_adjacency

    states, log = run(g, ColorExchangeProgram(x, original), w, budget, max_rounds, threads)
    if log.timed_out:
        raise SimulationTimeout("Color exchange did not finish", log)

    key_len = 2 * max((len(a) for a in original), default=0) + 2
    placement = [
        [Token(pad_key([x[u], *states[u]], key_len), uids[u], uids[u])] for u in range(g.n)
    ]
    ranked, rank_log = token_rank(g, placement, w, L, backend, budget, max_rounds, threads)
    log.extend(rank_log, "token-rank")

    colors = tuple(ranked[u][0].rank + 1 for u in range(g.n))
    logger.info(
        f"wl_virtual_edges: n={g.n} m={g.m} overlay={len(g.virtual_edges)} w={w} "
        f"backend={backend} -> {log.transmission_rounds} rounds"
    )
    return colors, log
