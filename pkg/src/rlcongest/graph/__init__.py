"""Graph representation, generators, metrics and preprocessing transforms."""

from __future__ import annotations

from .core import (
    AttributedGraph,
    ColorVector,
    canonical_edge,
    color_cap,
    is_connected,
    uniform_colors,
    validate_colors,
    validate_graph,
)
from .generators import FAMILIES, gen_connected_gnm, gen_erdos_renyi, gen_family
from .metrics import (
    INFINITE_DIAMETER,
    GraphMetrics,
    eccentricity,
    hop_distances,
    metrics,
)
from .transforms import (
    add_virtual_edges,
    add_virtual_node,
    assign_random_ids,
    assign_unique_ids,
    build_ktuple_graph,
    components,
    disjoint_union,
    induced_subgraph,
    largest_component,
    overlay_probability,
    relabel,
)

__all__ = [
    "AttributedGraph",
    "ColorVector",
    "FAMILIES",
    "GraphMetrics",
    "INFINITE_DIAMETER",
    "add_virtual_edges",
    "add_virtual_node",
    "assign_random_ids",
    "assign_unique_ids",
    "build_ktuple_graph",
    "canonical_edge",
    "color_cap",
    "components",
    "disjoint_union",
    "eccentricity",
    "gen_connected_gnm",
    "gen_erdos_renyi",
    "gen_family",
    "hop_distances",
    "induced_subgraph",
    "is_connected",
    "largest_component",
    "metrics",
    "overlay_probability",
    "relabel",
    "uniform_colors",
    "validate_colors",
    "validate_graph",
]
