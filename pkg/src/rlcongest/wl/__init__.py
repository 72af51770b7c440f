"""Reference (sequential) WL refinement engines."""

from __future__ import annotations

from .reference import (
    WlType,
    dense_rank,
    same_partition,
    verify_wl_coloring,
    wl_distinguishes,
    wl_refine_stable,
    wl_step_reference,
    wl_types,
)
from .variants import (
    KWL_VARIANTS,
    gdwl_step,
    kfwl_step,
    ktuple_initial_colors,
    kwl_distinguishes,
    kwl_refine_stable,
    kwl_step,
    rank_rows,
    rd_matrix,
    spd_matrix,
)

__all__ = [
    "KWL_VARIANTS",
    "WlType",
    "dense_rank",
    "gdwl_step",
    "kfwl_step",
    "ktuple_initial_colors",
    "kwl_distinguishes",
    "kwl_refine_stable",
    "kwl_step",
    "rank_rows",
    "rd_matrix",
    "same_partition",
    "spd_matrix",
    "verify_wl_coloring",
    "wl_distinguishes",
    "wl_refine_stable",
    "wl_step_reference",
    "wl_types",
]
