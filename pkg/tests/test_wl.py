"""Tests for the sequential WL engines."""

from __future__ import annotations

import numpy as np
import pytest

from rlcongest.exceptions import DisconnectedGraphError, InputError, ResourceError
from rlcongest.graph import gen_family, uniform_colors
from rlcongest.wl import (
    dense_rank,
    gdwl_step,
    kfwl_step,
    ktuple_initial_colors,
    kwl_distinguishes,
    kwl_refine_stable,
    kwl_step,
    rank_rows,
    rd_matrix,
    same_partition,
    spd_matrix,
    verify_wl_coloring,
    wl_distinguishes,
    wl_refine_stable,
    wl_step_reference,
)


class TestReferenceStep:
    """Tests for one sequential WL iteration."""

    def test_path_splits_ends_from_middle(self, path4):
        assert wl_step_reference(path4, uniform_colors(4)) == (1, 2, 2, 1)

    def test_regular_graph_stays_uniform(self, cycle6):
        assert wl_step_reference(cycle6, uniform_colors(6)) == (1,) * 6

    def test_dense_rank(self):
        assert dense_rank([5, 3, 5, 9]) == (2, 1, 2, 3)

    def test_rank_rows(self):
        keys = np.array([[2, 1], [1, 5], [2, 1]])

        assert rank_rows(keys).tolist() == [2, 1, 2]

    def test_verify_accepts_reference(self, house):
        """The oracle accepts any relabelling of the reference output."""
        x = (0, 1, 0, 1, 2)
        y = wl_step_reference(house, x)

        assert verify_wl_coloring(house, x, y)
        assert verify_wl_coloring(house, x, tuple(10 * c for c in y))

    def test_verify_rejects_merged_classes(self, path4):
        assert not verify_wl_coloring(path4, uniform_colors(4), (1, 1, 1, 1))
        assert not verify_wl_coloring(path4, uniform_colors(4), (1, 2, 3, 1))

    def test_same_partition(self):
        assert same_partition((1, 1, 2), (7, 7, 3))
        assert not same_partition((1, 1, 2), (7, 8, 3))

    def test_refine_stable_on_path(self):
        colors, steps = wl_refine_stable(gen_family("path", 5), uniform_colors(5))

        assert colors == (1, 2, 3, 2, 1)
        assert steps == 3

    def test_virtual_edges_ignored(self, cycle6):
        """Overlay edges never enter a node's WL-type."""
        from rlcongest.graph import add_virtual_edges

        overlaid = add_virtual_edges(cycle6, 2.0, 1)
        x = (0, 1, 0, 1, 0, 2)

        assert wl_step_reference(overlaid, x) == wl_step_reference(cycle6, x)


class TestDistinguishing:
    """Tests for pairwise graph tests."""

    def test_one_wl_misses_cycle_split(self, cycle6, two_triangles):
        assert not wl_distinguishes(cycle6, two_triangles)

    def test_one_wl_separates_path_from_star(self):
        assert wl_distinguishes(gen_family("path", 4), gen_family("star", 4))

    def test_two_wl_matches_one_wl(self, cycle6, two_triangles):
        assert not kwl_distinguishes(cycle6, two_triangles, 2, "kwl")

    def test_two_fwl_sees_triangles(self, cycle6, two_triangles):
        assert kwl_distinguishes(cycle6, two_triangles, 2, "kfwl")

    def test_unknown_variant(self, cycle6, two_triangles):
        with pytest.raises(InputError):
            kwl_distinguishes(cycle6, two_triangles, 2, "kxwl")


class TestTupleRefinement:
    """Tests for k-tuple colorings."""

    def test_initial_colors_on_complete_graph(self, k4):
        """Pairs of K4 split into the diagonal and the off-diagonal."""
        x = ktuple_initial_colors(k4, 2)

        assert len(x) == 16
        assert len(set(x)) == 2

    def test_steps_keep_length(self, path4):
        x = ktuple_initial_colors(path4, 2)

        assert len(kwl_step(path4, 2, x)) == 16
        assert len(kfwl_step(path4, 2, x)) == 16

    def test_stable_refinement(self, k4):
        colors, steps = kwl_refine_stable(k4, 2, "kfwl")

        assert len(set(colors)) == 2
        assert steps >= 1

    def test_budget(self, path4):
        with pytest.raises(ResourceError):
            ktuple_initial_colors(path4, 3, budget=10)

    def test_wrong_tuple_length(self, path4):
        with pytest.raises(InputError):
            kwl_step(path4, 2, [1] * 15)


class TestDistanceRefinement:
    """Tests for distance-aware refinement."""

    def test_spd_step_on_path(self, path4):
        y = gdwl_step(path4, spd_matrix(path4), uniform_colors(4))

        assert same_partition(y, (1, 2, 2, 1))

    def test_rd_step_on_cycle(self, cycle6):
        """A vertex-transitive graph stays a single class."""
        assert gdwl_step(cycle6, rd_matrix(cycle6), uniform_colors(6)) == (1,) * 6

    def test_spd_needs_connectivity(self, two_triangles):
        with pytest.raises(DisconnectedGraphError):
            spd_matrix(two_triangles)

    def test_shape_mismatch(self, path4):
        with pytest.raises(InputError):
            gdwl_step(path4, np.zeros((3, 3)), uniform_colors(4))
