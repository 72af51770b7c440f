"""Tests for effective resistance and the resistance-based cut predicates."""

from __future__ import annotations

import networkx as nx
import numpy as np
import pytest

from rlcongest.exceptions import DisconnectedGraphError, InputError, ParameterError
from rlcongest.graph import AttributedGraph, gen_family
from rlcongest.resistance import (
    assess_graph,
    cut_edge_local,
    cut_sets_tarjan,
    cut_vertex_local,
    experiment_locality,
    five_over_n,
    globality_witness,
    laplacian_matrix,
    laplacian_pinv,
    resistance_matrix,
    resistance_violations,
    spanning_tree_edge_fraction,
)


class TestResistanceMatrix:
    """Tests for the pseudo-inverse computation."""

    def test_known_values(self, k4):
        assert resistance_matrix(gen_family("path", 3))[0, 2] == pytest.approx(2.0)
        assert resistance_matrix(gen_family("complete", 3))[0, 1] == pytest.approx(2 / 3)
        assert resistance_matrix(gen_family("cycle", 4))[0, 1] == pytest.approx(3 / 4)
        assert resistance_matrix(k4)[1, 3] == pytest.approx(1 / 2)

    def test_series_on_path(self):
        """On a tree the resistance is the hop distance."""
        r = resistance_matrix(gen_family("path", 6))

        assert r[0, 5] == pytest.approx(5.0)
        assert r[1, 4] == pytest.approx(3.0)

    def test_pseudo_inverse(self, house):
        lap = laplacian_matrix(house)
        pinv = laplacian_pinv(house)

        np.testing.assert_allclose(lap @ pinv @ lap, lap, atol=1e-9)

    def test_invariants(self, er_graphs):
        for g in er_graphs:
            assert resistance_violations(g, resistance_matrix(g)) == []

    def test_violations_are_reported(self, path4):
        r = resistance_matrix(path4)
        r[0, 1] = 5.0

        problems = resistance_violations(path4, r)

        assert "not symmetric" in problems
        assert any(p.startswith("edge (0, 1)") for p in problems)

    def test_shape_mismatch(self, path4):
        assert resistance_violations(path4, np.zeros((3, 3))) == ["shape (3, 3) does not match n=4"]

    def test_disconnected(self, two_triangles):
        with pytest.raises(DisconnectedGraphError):
            resistance_matrix(two_triangles)

    def test_empty_graph(self):
        assert resistance_matrix(AttributedGraph(n=0)).shape == (0, 0)


class TestCutPredicates:
    """Tests for the resistance predicates against Tarjan and networkx."""

    def test_tarjan_matches_networkx(self, er_graphs, house):
        for g in [*er_graphs, house, gen_family("path", 5), gen_family("star", 5)]:
            bridges, cuts = cut_sets_tarjan(g)
            h = g.to_networkx()
            assert bridges == frozenset(tuple(sorted(e)) for e in nx.bridges(h))
            assert cuts == frozenset(nx.articulation_points(h))

    def test_tarjan_per_component(self):
        g = AttributedGraph.from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3), (5, 6)])

        bridges, cuts = cut_sets_tarjan(g)

        assert bridges == {(0, 1), (1, 2), (5, 6)}
        assert cuts == {1, 5}

    def test_predicates_agree_with_tarjan(self, er_graphs, house):
        for g in [*er_graphs, house, gen_family("star", 6)]:
            edge_pred, edge_act, node_pred, node_act = assess_graph(g)
            assert edge_pred == edge_act
            assert node_pred == node_act

    def test_bridge_on_path(self, path4):
        r = resistance_matrix(path4)

        assert cut_edge_local(r, (1, 2))
        assert cut_vertex_local(path4, r, 1)
        assert not cut_vertex_local(path4, r, 0)

    def test_no_cuts_in_cycle(self, cycle6):
        r = resistance_matrix(cycle6)

        assert not any(cut_edge_local(r, e) for e in cycle6.sorted_edges)
        assert not any(cut_vertex_local(cycle6, r, u) for u in range(6))


class TestSpanningTreeFraction:
    """Tests for the matrix-tree view of edge resistance."""

    def test_resistance_is_tree_share(self, er_graphs, house):
        """Seeded sweep: R(u, v) equals the share of spanning trees through (u, v)."""
        for g in [house, *er_graphs[:4]]:
            r = resistance_matrix(g)
            for e in g.sorted_edges:
                assert spanning_tree_edge_fraction(g, e) == pytest.approx(r[e], abs=1e-8)

    def test_cycle_share(self):
        assert spanning_tree_edge_fraction(gen_family("cycle", 5), (0, 1)) == pytest.approx(4 / 5)

    def test_bridge_share(self, path4):
        assert spanning_tree_edge_fraction(path4, (0, 1)) == 1.0

    def test_limits(self, path4, two_triangles):
        with pytest.raises(InputError):
            spanning_tree_edge_fraction(path4, (0, 2))
        with pytest.raises(DisconnectedGraphError):
            spanning_tree_edge_fraction(two_triangles, (0, 1))
        with pytest.raises(ParameterError):
            spanning_tree_edge_fraction(gen_family("path", 65), (0, 1))


class TestLocalityExperiment:
    """Tests for the sampled accuracy experiment."""

    def test_small_dataset_is_exact(self):
        report = experiment_locality(count=6, n_range=(10, 30), seed=3)

        assert report.count == 6
        assert report.edge_accuracy == 1.0
        assert report.node_accuracy == 1.0
        assert [g.index for g in report.graphs] == list(range(6))

    def test_deterministic_and_parallel(self):
        serial = experiment_locality(count=5, n_range=(10, 20), seed=9, parallel_jobs=1)
        parallel = experiment_locality(count=5, n_range=(10, 20), seed=9, parallel_jobs=3)

        assert serial.rows() == parallel.rows()

    def test_rows(self):
        report = experiment_locality(count=2, n_range=(12, 12), seed=1)
        row = report.rows()[0]

        assert row["n_sampled"] == 12
        assert row["p"] == pytest.approx(five_over_n(12))
        assert row["component_n"] <= 12
        assert row["edge_correct"] == 1

    def test_empty_dataset(self):
        report = experiment_locality(count=0)

        assert report.count == 0
        assert report.edge_accuracy is None
        assert report.summary()["policy"] == "largest connected component"

    def test_bad_parameters(self):
        with pytest.raises(ParameterError):
            experiment_locality(count=-1)
        with pytest.raises(ParameterError):
            experiment_locality(count=1, n_range=(30, 10))


class TestGlobalityWitness:
    """Tests for the path-versus-cycle witness."""

    @pytest.mark.parametrize("n", [10, 50])
    def test_witness_holds(self, n):
        witness = globality_witness(n)

        assert witness.holds
        assert witness.bridge_in_path and not witness.bridge_in_cycle
        assert witness.cut_in_path and not witness.cut_in_cycle
        assert witness.radius == n // 2 - 2
        assert witness.to_dict()["holds"] is True

    def test_too_small(self):
        with pytest.raises(ParameterError):
            globality_witness(3)
