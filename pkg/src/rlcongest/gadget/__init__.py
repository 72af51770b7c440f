"""Equality gadget graphs and round-count trend scans."""

from __future__ import annotations

from .eq import (
    SIDES,
    GadgetGraph,
    GadgetSpec,
    biconditional_holds,
    build_eq_gadget,
    disagreeing_pairs,
    expected_disagreements,
    is_automorphism,
    mirror_permutation,
    pair_index,
    pair_of,
    random_spec,
    verify_gadget_property,
)
from .scan import MAX_SCAN_M, MAX_SCAN_N, GadgetScanRow, gadget_round_scan, trend_violations

__all__ = [
    "MAX_SCAN_M",
    "MAX_SCAN_N",
    "SIDES",
    "GadgetGraph",
    "GadgetScanRow",
    "GadgetSpec",
    "biconditional_holds",
    "build_eq_gadget",
    "disagreeing_pairs",
    "expected_disagreements",
    "gadget_round_scan",
    "is_automorphism",
    "mirror_permutation",
    "pair_index",
    "pair_of",
    "random_spec",
    "trend_violations",
    "verify_gadget_property",
]
