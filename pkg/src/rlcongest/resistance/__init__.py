"""Effective resistance and the local biconnectivity predicates."""

from __future__ import annotations

from .locality import (
    MATRIX_TREE_LIMIT,
    PREDICATE_TOL,
    GlobalityWitness,
    GraphLocality,
    LocalityReport,
    assess_graph,
    cut_edge_local,
    cut_sets_tarjan,
    cut_vertex_local,
    experiment_locality,
    five_over_n,
    globality_witness,
    spanning_tree_edge_fraction,
)
from .matrix import laplacian_matrix, laplacian_pinv, resistance_matrix, resistance_violations

__all__ = [
    "MATRIX_TREE_LIMIT",
    "PREDICATE_TOL",
    "GlobalityWitness",
    "GraphLocality",
    "LocalityReport",
    "assess_graph",
    "cut_edge_local",
    "cut_sets_tarjan",
    "cut_vertex_local",
    "experiment_locality",
    "five_over_n",
    "globality_witness",
    "laplacian_matrix",
    "laplacian_pinv",
    "resistance_matrix",
    "resistance_violations",
    "spanning_tree_edge_fraction",
]
