"""File formats and run reports for rlcongest."""

from __future__ import annotations

from .formats import (
    read_colors,
    read_distance_csv,
    read_graph,
    write_colors,
    write_distance_csv,
    write_graph,
)
from .reports import (
    EDGE_COLUMNS,
    GADGET_COLUMNS,
    SCAN_COLUMNS,
    STEP_COLUMNS,
    default_grouping,
    generate_run_name,
    read_json,
    read_manifest,
    read_rows_csv,
    summarize_rows,
    write_json,
    write_manifest,
    write_roundlog,
    write_rows_csv,
)

__all__ = [
    "EDGE_COLUMNS",
    "GADGET_COLUMNS",
    "SCAN_COLUMNS",
    "STEP_COLUMNS",
    "default_grouping",
    "generate_run_name",
    "read_colors",
    "read_distance_csv",
    "read_graph",
    "read_json",
    "read_manifest",
    "read_rows_csv",
    "summarize_rows",
    "write_colors",
    "write_distance_csv",
    "write_graph",
    "write_json",
    "write_manifest",
    "write_roundlog",
    "write_rows_csv",
]
