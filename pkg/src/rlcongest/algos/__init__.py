"""Distributed algorithms run as node programs on the RL-CONGEST simulator."""

from __future__ import annotations

from .routing import expander_route, routing_table, routing_tree, validate_instance
from .scan import (
    ALGORITHMS,
    ScanRow,
    bound_violations,
    fit_round_model,
    round_bound,
    round_scan,
    run_algorithm,
    tree_round_bound,
)
from .sorting import bitonic_layers, expander_sort, token_rank
from .tokens import KEY_SENTINEL, NO_RANK, Token, dummy_token, pad_key
from .tree import (
    BROADCAST,
    NO_PARENT,
    SpanningTreeState,
    downcast,
    downcast_records,
    flood_bfs,
    node_ids,
    upcast,
)
from .virtual_edges import wl_virtual_edges
from .virtual_node import wl_virtual_node
from .wl_tree import global_compute, wl_congest

__all__ = [
    "ALGORITHMS",
    "BROADCAST",
    "KEY_SENTINEL",
    "NO_PARENT",
    "NO_RANK",
    "ScanRow",
    "SpanningTreeState",
    "Token",
    "bitonic_layers",
    "bound_violations",
    "downcast",
    "downcast_records",
    "dummy_token",
    "expander_route",
    "expander_sort",
    "fit_round_model",
    "flood_bfs",
    "global_compute",
    "node_ids",
    "pad_key",
    "round_bound",
    "round_scan",
    "routing_table",
    "routing_tree",
    "run_algorithm",
    "token_rank",
    "tree_round_bound",
    "upcast",
    "validate_instance",
    "wl_congest",
    "wl_virtual_edges",
    "wl_virtual_node",
]
