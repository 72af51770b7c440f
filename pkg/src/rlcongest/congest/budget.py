"""Computation-step metering and per-round step budgets."""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import TypeVar

T = TypeVar("T")


class StepKind(str, Enum):
    COMPARE = "compare"
    WORD_OP = "word-op"
    READ = "read"
    WRITE = "write"


@dataclass
class StepMeter:
    """Counts the steps one node spends inside one on_round call."""

    counts: Counter = field(default_factory=Counter)

    def step(self, kind: StepKind = StepKind.WORD_OP) -> None:
        self.counts[kind] += 1

    def charge(self, kind: StepKind, count: int) -> None:
        if count > 0:
            self.counts[kind] += count

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def reset(self) -> None:
        self.counts.clear()


def log2_ceil(n: int) -> int:
    """``max(1, ceil(log2 n))``, the word length in bits up to a constant."""
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


@dataclass(frozen=True)
class StepBudget:
    """A named computation class with a concrete per-node per-round step cap.

    Attributes:
        class_name: Label such as ``TIME(nΔ log n)``
        shape: Growth function of (n, Δ) without the slack constant; None means unbounded
        kappa: Slack constant multiplying ``shape``
    """

    class_name: str
    shape: Callable[[int, int], float] | None
    kappa: float = 8.0

    def bound(self, n: int, max_degree: int) -> float:
        if self.shape is None:
            return math.inf
        return math.ceil(self.kappa * self.shape(max(n, 1), max(max_degree, 1)))

    @property
    def unbounded(self) -> bool:
        return self.shape is None


def time_n_delta_log_n(kappa: float = 8.0) -> StepBudget:
    return StepBudget("TIME(nΔ log n)", lambda n, d: n * d * log2_ceil(n), kappa)


def time_delta_polylog(kappa: float = 8.0) -> StepBudget:
    return StepBudget("TIME(Δ polylog n)", lambda n, d: d * log2_ceil(n) ** 2, kappa)


def unbounded_budget() -> StepBudget:
    return StepBudget("unbounded", None, 1.0)


def _scalar_cmp(a, b, meter: StepMeter) -> int:
    meter.step(StepKind.COMPARE)
    return (a > b) - (a < b)


def compare_words(a: Sequence[int], b: Sequence[int], meter: StepMeter) -> int:
    """Lexicographic comparison charging one step per word position examined."""
    for x, y in zip(a, b):
        meter.step(StepKind.COMPARE)
        if x != y:
            return -1 if x < y else 1
    meter.step(StepKind.COMPARE)
    return (len(a) > len(b)) - (len(a) < len(b))


Comparator = Callable[[T, T, StepMeter], int]


def metered_merge(
    a: Sequence[T], b: Sequence[T], meter: StepMeter, cmp: Comparator | None = None
) -> list[T]:
    """Stable merge of two sorted runs using at most ``len(a) + len(b) - 1`` comparisons."""
    cmp = cmp or _scalar_cmp
    out: list[T] = []
    i = j = 0
    while i < len(a) and j < len(b):
        if cmp(b[j], a[i], meter) < 0:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
    out.extend(a[i:])
    out.extend(b[j:])
    meter.charge(StepKind.WRITE, len(out))
    return out


def metered_sort(
    items: Sequence[T], meter: StepMeter, cmp: Comparator | None = None
) -> list[T]:
    """Top-down stable merge sort with every comparison charged to ``meter``."""
    items = list(items)
    if len(items) <= 1:
        return items
    mid = len(items) // 2
    return metered_merge(
        metered_sort(items[:mid], meter, cmp), metered_sort(items[mid:], meter, cmp), meter, cmp
    )


def metered_dense_rank(keys: Sequence[T], meter: StepMeter, cmp: Comparator | None = None) -> list[int]:
    """1-based dense rank of every key, computed by a metered sort plus one scan."""
    cmp = cmp or _scalar_cmp
    order = metered_sort(range(len(keys)), meter, lambda i, j, m: cmp(keys[i], keys[j], m))
    ranks = [0] * len(keys)
    current = 0
    for pos, idx in enumerate(order):
        if pos == 0 or cmp(keys[order[pos - 1]], keys[idx], meter) != 0:
            current += 1
        ranks[idx] = current
    meter.charge(StepKind.WRITE, len(keys))
    return ranks
