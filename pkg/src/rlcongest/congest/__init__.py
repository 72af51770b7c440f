"""RL-CONGEST simulator: node programs, round logs and step budgets."""

from __future__ import annotations

from .budget import (
    StepBudget,
    StepKind,
    StepMeter,
    compare_words,
    log2_ceil,
    metered_dense_rank,
    metered_merge,
    metered_sort,
    time_delta_polylog,
    time_n_delta_log_n,
    unbounded_budget,
)
from .roundlog import RoundLog
from .simulator import NodeContext, NodeProgram, local_compute, run
from .words import RecordCodec, WordCodec

__all__ = [
    "NodeContext",
    "NodeProgram",
    "RecordCodec",
    "RoundLog",
    "StepBudget",
    "StepKind",
    "StepMeter",
    "WordCodec",
    "compare_words",
    "local_compute",
    "log2_ceil",
    "metered_dense_rank",
    "metered_merge",
    "metered_sort",
    "run",
    "time_delta_polylog",
    "time_n_delta_log_n",
    "unbounded_budget",
]
