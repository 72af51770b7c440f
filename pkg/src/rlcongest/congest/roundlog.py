"""Per-round accounting of words sent and computation steps."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field


@dataclass
class RoundLog:
    """Words per directed edge and steps per node, round by round.

    Round numbers are 1-based. ``rounds`` is the number of on_round
    invocation rounds; ``transmission_rounds`` is the last round in which any
    word crossed an edge, i.e. the communication depth of the run.
    """

    width: int
    rounds: int = 0
    words_sent: dict[int, dict[tuple[int, int], int]] = field(
        default_factory=lambda: defaultdict(dict)
    )
    steps: dict[int, dict[int, int]] = field(default_factory=lambda: defaultdict(dict))
    timed_out: bool = False
    dropped_words: int = 0
    phases: list[tuple[str, int]] = field(default_factory=list)

    def record_words(self, round_no: int, u: int, v: int, count: int) -> None:
        if count:
            edges = self.words_sent[round_no]
            edges[(u, v)] = edges.get((u, v), 0) + count

    def record_steps(self, round_no: int, node: int, count: int) -> None:
        if count:
            nodes = self.steps[round_no]
            nodes[node] = nodes.get(node, 0) + count

    @property
    def transmission_rounds(self) -> int:
        return max((r for r, edges in self.words_sent.items() if edges), default=0)

    @property
    def total_words(self) -> int:
        return sum(sum(edges.values()) for edges in self.words_sent.values())

    @property
    def peak_node_steps(self) -> int:
        return max((max(nodes.values()) for nodes in self.steps.values() if nodes), default=0)

    @property
    def max_edge_words(self) -> int:
        return max(
            (max(edges.values()) for edges in self.words_sent.values() if edges), default=0
        )

    def node_peak_steps(self, node: int) -> int:
        """Largest per-round step count of one node."""
        return max((nodes.get(node, 0) for nodes in self.steps.values()), default=0)

    def charge_local(self, node: int, count: int, round_no: int | None = None) -> int:
        """Book a centralized computation at ``node``.

        By default the steps land in the round that receives the last
        transmitted words, which is also round 1 of any phase appended later.

        Returns:
            The node's total steps in that round after booking
        """
        target = round_no if round_no is not None else self.transmission_rounds + 1
        self.record_steps(target, node, count)
        self.rounds = max(self.rounds, target)
        return self.steps[target][node] if count else self.steps.get(target, {}).get(node, 0)

    def extend(self, other: RoundLog, label: str = "") -> RoundLog:
        """Append a later phase whose round 1 coincides with this log's last receive round."""
        offset = self.transmission_rounds
        for r, edges in other.words_sent.items():
            for (u, v), c in edges.items():
                self.record_words(offset + r, u, v, c)
        for r, nodes in other.steps.items():
            for node, c in nodes.items():
                self.record_steps(offset + r, node, c)
        self.rounds = max(self.rounds, offset + other.rounds)
        self.timed_out = self.timed_out or other.timed_out
        self.dropped_words += other.dropped_words
        self.phases.append((label or f"phase{len(self.phases) + 1}", other.transmission_rounds))
        return self

    def summary(self) -> dict[str, int | bool]:
        return {
            "rounds": self.rounds,
            "transmission_rounds": self.transmission_rounds,
            "total_words": self.total_words,
            "peak_node_steps": self.peak_node_steps,
            "width": self.width,
            "timed_out": self.timed_out,
        }

    def step_rows(self) -> list[tuple[int, int, int]]:
        """(round, node, steps) rows in round/node order."""
        return [
            (r, node, c)
            for r in sorted(self.steps)
            for node, c in sorted(self.steps[r].items())
        ]

    def edge_rows(self) -> list[tuple[int, int, int, str, int]]:
        """(round, edge_u, edge_v, direction, words) rows over canonical edges."""
        rows = []
        for r in sorted(self.words_sent):
            for (u, v), c in sorted(self.words_sent[r].items()):
                a, b = (u, v) if u < v else (v, u)
                rows.append((r, a, b, "fwd" if u < v else "rev", c))
        return rows
