"""Tests for the equality gadget and its round scans."""

from __future__ import annotations

import itertools
import math

import pytest

from rlcongest.exceptions import InputError, ParameterError
from rlcongest.gadget import (
    GadgetSpec,
    biconditional_holds,
    build_eq_gadget,
    disagreeing_pairs,
    expected_disagreements,
    gadget_round_scan,
    is_automorphism,
    mirror_permutation,
    pair_index,
    pair_of,
    random_spec,
    trend_violations,
    verify_gadget_property,
)
from rlcongest.gadget.scan import GadgetScanRow
from rlcongest.graph import is_connected
from rlcongest.wl import wl_step_reference


class TestGadgetSpec:
    """Tests for gadget parameters."""

    def test_pair_bijection(self):
        for n in range(1, 6):
            for k in range(1, n * n + 1):
                i, j = pair_of(k, n)
                assert 1 <= j <= n
                assert pair_index(i, j, n) == k

    @pytest.mark.parametrize(
        "n,m,a,b",
        [
            (0, 0, (), ()),
            (2, 1, (0,), (0,)),
            (2, 5, (0,) * 5, (0,) * 5),
            (2, 2, (0, 1), (0,)),
            (2, 2, (0, 2), (0, 1)),
        ],
    )
    def test_invalid_specs(self, n, m, a, b):
        with pytest.raises(ParameterError):
            GadgetSpec(n, m, a, b)

    def test_negative_path(self):
        with pytest.raises(ParameterError):
            GadgetSpec(2, 2, (0, 1), (0, 1), path_len=-1)

    def test_dict_round_trip(self):
        spec = random_spec(3, 7, 5, path_len=2)

        assert GadgetSpec.from_dict(spec.to_dict()) == spec
        assert spec.to_dict()["a"] == "".join(map(str, spec.a))

    def test_equal_inputs(self):
        spec = random_spec(4, 10, 2, equal=True)

        assert spec.a == spec.b


class TestBuildGadget:
    """Tests for gadget construction."""

    def test_smallest_counts(self):
        gg = build_eq_gadget(GadgetSpec(2, 2, (0, 1), (1, 1)))

        assert gg.graph.n == 12
        assert gg.graph.m == 13
        assert is_connected(gg.graph)

    def test_counts_sweep(self):
        """Seeded sweep: node and edge counts follow the closed forms."""
        for seed, (n, m) in enumerate([(1, 1), (2, 3), (3, 3), (3, 9), (4, 7), (5, 25)]):
            spec = random_spec(n, m, seed, path_len=seed % 3)
            gg = build_eq_gadget(spec)
            k = math.ceil(m / n)
            assert gg.graph.n == 4 * n + 2 * k + 2 + spec.path_len
            assert gg.graph.m == 2 * (2 * n - 1) + 2 * k + 1 + 2 * m + spec.path_len

    def test_bit_wiring(self):
        """Bit 0 joins w_i to u_j and bit 1 joins w_i to v_j."""
        gg = build_eq_gadget(GadgetSpec(2, 3, (0, 1, 1), (1, 0, 0)))
        g = gg.graph
        (wa1, wa2), (wb1, wb2) = gg.w

        assert g.has_edge(wa1, gg.u[0][0])
        assert g.has_edge(wa1, gg.v[0][1])
        assert g.has_edge(wa2, gg.v[0][0])
        assert g.has_edge(wb1, gg.v[1][0])
        assert g.has_edge(wb2, gg.u[1][0])

    def test_initial_colors(self):
        gg = build_eq_gadget(GadgetSpec(3, 4, (0,) * 4, (1,) * 4, path_len=3))
        c = gg.colors

        assert c[gg.x[0]] == c[gg.x[1]] == 0
        assert [c[u] for u in gg.u[1]] == [1, 2, 3]
        assert [c[v] for v in gg.v[0]] == [4, 5, 6]
        assert [c[w] for w in gg.w[0]] == [7, 8]
        assert [c[p] for p in gg.path] == [10, 11, 10]

    def test_role_map(self):
        gg = build_eq_gadget(GadgetSpec(2, 2, (0, 1), (0, 1), path_len=1))
        roles = gg.role_map()

        assert roles["x"] == {"A": gg.x[0], "B": gg.x[1]}
        assert roles["path"] == list(gg.path)
        assert roles["spec"]["a"] == "01"


class TestSeparation:
    """Tests for the color-separation property of one WL step."""

    def test_exhaustive_two_bit_inputs(self):
        """All 16 input pairs at n = m = 2."""
        for a, b in itertools.product(itertools.product((0, 1), repeat=2), repeat=2):
            gg = build_eq_gadget(GadgetSpec(2, 2, a, b))
            y = wl_step_reference(gg.graph, gg.colors)
            assert biconditional_holds(gg, y)
            assert disagreeing_pairs(gg, y) == expected_disagreements(gg.spec)

    def test_single_flip_locates_block(self):
        """Seeded sweep: flipping bit t separates exactly pair ceil(t / n)."""
        n, m = 3, 8
        for seed in range(6):
            base = random_spec(n, m, seed, equal=True)
            t = 1 + seed % m
            b = list(base.a)
            b[t - 1] ^= 1
            gg = build_eq_gadget(GadgetSpec(n, m, base.a, tuple(b)))
            y = wl_step_reference(gg.graph, gg.colors)
            assert disagreeing_pairs(gg, y) == [math.ceil(t / n)]
            assert not verify_gadget_property(gg, y)

    def test_mirror_is_automorphism_for_equal_inputs(self):
        for seed in range(4):
            gg = build_eq_gadget(random_spec(3, 6, seed, equal=True, path_len=seed))
            perm = mirror_permutation(gg)
            assert is_automorphism(gg.graph, perm)
            assert all(gg.colors[perm[u]] == gg.colors[u] for u in range(gg.graph.n))

    def test_mirror_breaks_for_unequal_inputs(self):
        gg = build_eq_gadget(GadgetSpec(2, 2, (0, 0), (0, 1)))

        assert not is_automorphism(gg.graph, mirror_permutation(gg))

    def test_rejects_non_refinement(self):
        gg = build_eq_gadget(GadgetSpec(2, 2, (0, 1), (0, 1)))

        with pytest.raises(InputError):
            verify_gadget_property(gg, [1] * gg.graph.n)


class TestGadgetScan:
    """Tests for round scans over gadget families."""

    def test_rounds_grow_with_m(self):
        rows, failures = gadget_round_scan(4, [4, 16], [1], seed=2)

        assert failures == []
        assert [r.m for r in rows] == [4, 16]
        assert trend_violations(rows) == []

    def test_rounds_shrink_with_w(self):
        rows, failures = gadget_round_scan(3, [9], [1, 4], seed=2, parallel_jobs=2)

        assert failures == []
        assert [r.w for r in rows] == [1, 4]
        assert rows[1].rounds < rows[0].rounds
        assert rows[0].total_words == rows[1].total_words

    def test_long_path_costs_rounds(self):
        rows, _ = gadget_round_scan(2, [2], [4], path_len=50)

        assert rows[0].D >= 51
        assert rows[0].rounds >= 50

    def test_trend_violation_detected(self):
        rows = [
            GadgetScanRow(3, 3, 1, 5, 30, 40),
            GadgetScanRow(3, 9, 1, 5, 20, 80),
            GadgetScanRow(3, 9, 2, 5, 25, 80),
        ]

        problems = trend_violations(rows)

        assert len(problems) == 2

    def test_limits(self):
        with pytest.raises(ParameterError):
            gadget_round_scan(65, [65], [1])
        with pytest.raises(ParameterError):
            gadget_round_scan(3, [3], [0])
