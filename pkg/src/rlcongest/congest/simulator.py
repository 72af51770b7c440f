"""Round-synchronous executor of node programs under bandwidth and step limits."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, ClassVar, TypeVar

from ..exceptions import (
    BandwidthViolation,
    BudgetViolation,
    DisconnectedGraphError,
    ParameterError,
    SimulationError,
)
from ..graph import AttributedGraph, is_connected
from ..graph.core import WORD_MAX, WORD_MIN
from ..utils import get_logger
from .budget import StepBudget, StepMeter, unbounded_budget
from .roundlog import RoundLog

logger = get_logger()

R = TypeVar("R")

Inbox = dict[int, list[int]]
Outbox = dict[int, list[int]]


@dataclass
class NodeContext:
    """What a node knows locally: its index, ID, neighbors, n, features and the meter."""

    node: int
    uid: int
    neighbors: tuple[int, ...]
    n: int
    width: int
    features: tuple[int, ...]
    meter: StepMeter = field(default_factory=StepMeter)
    round: int = 0

    @property
    def degree(self) -> int:
        return len(self.neighbors)


class NodeProgram(ABC):
    """Message-passing node logic: ``init`` once, then ``on_round`` every round.

    ``on_round`` returns ``(state, outbox, halt)``. The outbox maps neighbor
    index to a word list of at most ``w`` words. A halted node is never called
    again unless the program sets ``wakes_on_message``, in which case incoming
    words re-activate it.
    """

    wakes_on_message: ClassVar[bool] = False
    requires_connected: ClassVar[bool] = True

    @abstractmethod
    def init(self, ctx: NodeContext) -> Any:
        ...

    @abstractmethod
    def on_round(self, ctx: NodeContext, state: Any, inbox: Inbox) -> tuple[Any, Outbox, bool]:
        ...


def _check_words(round_no: int, u: int, v: int, words: list[int], width: int) -> list[int]:
    if len(words) > width:
        raise BandwidthViolation(round_no, (u, v), len(words), width)
    out = []
    for word in words:
        word = int(word)
        if not WORD_MIN <= word <= WORD_MAX:
            raise SimulationError(f"Round {round_no}: value {word} on {u}->{v} is not a word")
        out.append(word)
    return out


def run(
    g: AttributedGraph,
    program: NodeProgram,
    w: int,
    budget: StepBudget | None = None,
    max_rounds: int = 100_000,
    threads: int = 1,
) -> tuple[list[Any], RoundLog]:
    """Execute ``program`` on every node of ``g`` in lock step.

    Round r outboxes are computed from the words delivered at the end of
    round r-1 only. Within a round nodes may run on a thread pool; results are
    applied in ascending node order, so the outcome does not depend on
    ``threads``.

    Args:
        g: Communication graph
        program: Node logic shared by all nodes
        w: Bandwidth in words per edge direction per round
        budget: Per-node per-round step cap (unbounded when None)
        max_rounds: Round limit; reaching it marks the log as timed out
        threads: Worker threads used for on_round calls

    Returns:
        Tuple of (final per-node states, RoundLog)

    Raises:
        ParameterError: If ``w < 1`` or ``max_rounds < 0``
        DisconnectedGraphError: If the program needs a connected graph
        BandwidthViolation: If a node puts more than ``w`` words on one edge
        BudgetViolation: If a node exceeds the step cap in one round
    """
    if w < 1:
        raise ParameterError(f"Bandwidth w must be at least 1, got {w}")
    if max_rounds < 0:
        raise ParameterError(f"max_rounds must be nonnegative, got {max_rounds}")
    if program.requires_connected and not is_connected(g):
        raise DisconnectedGraphError(f"{type(program).__name__} needs a connected graph")

    budget = budget or unbounded_budget()
    cap = budget.bound(g.n, g.max_degree)
    labels = g.labels if g.labels is not None else tuple(range(g.n))
    contexts = [
        NodeContext(u, labels[u], g.neighbors(u), g.n, w, g.features[u]) for u in range(g.n)
    ]
    neighbor_sets = [frozenset(a) for a in g.adjacency]
    states = [program.init(ctx) for ctx in contexts]
    halted = [False] * g.n
    inboxes: list[Inbox] = [{} for _ in range(g.n)]
    log = RoundLog(width=w)

    def invoke(u: int) -> tuple[Any, Outbox, bool]:
        ctx = contexts[u]
        ctx.meter.reset()
        return program.on_round(ctx, states[u], inboxes[u])

    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        round_no = 0
        while True:
            active = [
                u
                for u in range(g.n)
                if not halted[u] or (program.wakes_on_message and inboxes[u])
            ]
            if not active:
                break
            if round_no >= max_rounds:
                log.timed_out = True
                logger.warning(f"{type(program).__name__} hit max_rounds={max_rounds}")
                break
            round_no += 1
            for u in active:
                contexts[u].round = round_no
            mapper = executor.map if executor else map
            results = list(mapper(invoke, active))

            delivered: list[Inbox] = [{} for _ in range(g.n)]
            for u, (state, outbox, halt) in zip(active, results):
                states[u] = state
                steps = contexts[u].meter.total
                log.record_steps(round_no, u, steps)
                if steps > cap:
                    raise BudgetViolation(round_no, u, steps, cap)
                for v in sorted(outbox or {}):
                    if v not in neighbor_sets[u]:
                        raise SimulationError(f"Round {round_no}: node {u} sent to non-neighbor {v}")
                    words = _check_words(round_no, u, v, outbox[v], w)
                    if not words:
                        continue
                    log.record_words(round_no, u, v, len(words))
                    delivered[v][u] = words
                halted[u] = bool(halt)

            if not program.wakes_on_message:
                for v in range(g.n):
                    if halted[v] and delivered[v]:
                        log.dropped_words += sum(len(ws) for ws in delivered[v].values())
                        delivered[v] = {}
            inboxes = [dict(sorted(box.items())) for box in delivered]
    finally:
        if executor:
            executor.shutdown()

    log.rounds = round_no
    if log.dropped_words:
        logger.warning(f"{log.dropped_words} words were sent to halted nodes and dropped")
    logger.debug(
        f"{type(program).__name__}: {log.rounds} rounds, "
        f"{log.transmission_rounds} transmitting, {log.total_words} words"
    )
    return states, log


def local_compute(
    log: RoundLog,
    node: int,
    fn: Callable[[StepMeter], R],
    budget: StepBudget | None,
    n: int,
    max_degree: int,
) -> R:
    """Run a centralized computation at ``node`` and book its steps.

    The steps go to the round in which the node received the last words of
    ``log``; they are added to whatever the node already spent there.

    Raises:
        BudgetViolation: If the node's total for that round exceeds the cap
    """
    meter = StepMeter()
    result = fn(meter)
    round_no = log.transmission_rounds + 1
    total = log.charge_local(node, meter.total, round_no)
    cap = (budget or unbounded_budget()).bound(n, max_degree)
    if total > cap:
        raise BudgetViolation(round_no, node, total, cap)
    return result
