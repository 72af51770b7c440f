"""Tests for BFS flooding, convergecast and broadcast."""

from __future__ import annotations

import pytest

from rlcongest.algos import (
    BROADCAST,
    NO_PARENT,
    downcast,
    downcast_records,
    flood_bfs,
    node_ids,
    tree_round_bound,
    upcast,
)
from rlcongest.exceptions import InputError, SimulationTimeout
from rlcongest.graph import AttributedGraph, assign_random_ids, eccentricity, hop_distances


class TestFloodBfs:
    """Tests for BFS tree construction by flooding."""

    def test_path_tree(self, path4):
        tree, log = flood_bfs(path4, 0)

        assert tree.parent == (NO_PARENT, 0, 1, 2)
        assert tree.depth == (0, 1, 2, 3)
        assert tree.children == ((1,), (2,), (3,), ())
        assert log.transmission_rounds == 4

    def test_rounds_are_eccentricity_plus_one(self, er_graphs):
        """Seeded sweep: depths are BFS distances and rounds are ecc(root) + 1."""
        for g in er_graphs:
            tree, log = flood_bfs(g, 0)
            tree.validate(g)
            assert list(tree.depth) == hop_distances(g)[0].astype(int).tolist()
            assert log.transmission_rounds == int(eccentricity(g, 0)) + 1

    def test_parent_is_smallest_earlier_neighbor(self, house):
        tree, _ = flood_bfs(house, 0)

        assert tree.parent[2] == 1
        assert tree.parent[4] == 3

    def test_bad_root(self, path4):
        with pytest.raises(InputError):
            flood_bfs(path4, 4)

    def test_unreachable_nodes(self, two_triangles):
        with pytest.raises(SimulationTimeout):
            flood_bfs(two_triangles, 0)

    def test_path_to_root(self, path4):
        tree, _ = flood_bfs(path4, 0)

        assert tree.path_to_root(3) == [3, 2, 1, 0]


class TestUpcast:
    """Tests for pipelined convergecast."""

    def test_collects_every_word(self, er_graphs):
        """Seeded sweep over widths: no word lost and rounds within the pipeline bound."""
        for g in er_graphs:
            tree, _ = flood_bfs(g, 0)
            tokens = [[100 * u + i for i in range(u % 3)] for u in range(g.n)]
            total = sum(len(t) for t in tokens)
            for w in (1, 2, 5):
                collected, log = upcast(g, tree, tokens, w)
                assert sorted(collected) == sorted(x for t in tokens for x in t)
                assert log.transmission_rounds <= tree_round_bound(tree.height, total, w, 0)

    def test_star_single_round(self, star5):
        tree, _ = flood_bfs(star5, 0)
        collected, log = upcast(star5, tree, [[], [1], [2], [3], [4]], 1)

        assert sorted(collected) == [1, 2, 3, 4]
        assert log.transmission_rounds == 1

    def test_records_arrive_whole(self, er_graphs):
        """Three-word records from many subtrees are never interleaved at the root."""
        for g in [*er_graphs[2:5], *(assign_random_ids(g, 1) for g in er_graphs[5:])]:
            tree, _ = flood_bfs(g, 0)
            records = {u: [(u, i, 31 * u + i) for i in range(u % 3 + 1)] for u in range(g.n)}
            tokens = [[x for rec in records[u] for x in rec] for u in range(g.n)]
            for w in (1, 2, 4):
                collected, _ = upcast(g, tree, tokens, w, record_width=3)
                triples = [tuple(collected[i : i + 3]) for i in range(0, len(collected), 3)]
                assert sorted(triples) == sorted(r for recs in records.values() for r in recs)

    def test_partial_record_rejected(self, path4):
        tree, _ = flood_bfs(path4, 0)

        with pytest.raises(InputError):
            upcast(path4, tree, [[1, 2], [3, 4, 5], [], []], 1, record_width=2)

    def test_wrong_token_count(self, path4):
        tree, _ = flood_bfs(path4, 0)

        with pytest.raises(InputError):
            upcast(path4, tree, [[1]], 1)


class TestDowncast:
    """Tests for pipelined broadcast from the root."""

    def test_addressed_messages(self, er_graphs):
        for g in er_graphs:
            tree, _ = flood_bfs(g, 0)
            messages = [(u, 7 * u + 1) for u in reversed(range(g.n))]
            delivered, log = downcast(g, tree, messages, 2)
            assert delivered == [[7 * u + 1] for u in range(g.n)]
            assert log.transmission_rounds <= tree_round_bound(tree.height, g.n - 1, 2, 0)

    def test_random_ids(self, cycle6):
        """Messages are addressed by ID, not by node index."""
        g = assign_random_ids(cycle6, 3)
        tree, _ = flood_bfs(g, 0)
        uids = node_ids(g)

        delivered, _ = downcast(g, tree, [(uids[4], 9), (uids[4], 10)], 1)

        assert delivered[4] == [9, 10]
        assert all(delivered[u] == [] for u in range(6) if u != 4)

    def test_broadcast_records(self, path4):
        tree, _ = flood_bfs(path4, 0)

        kept, _ = downcast_records(path4, tree, [(5, 6)], 2, lambda rec: BROADCAST, 1)

        assert kept == [[(5, 6)]] * 4

    def test_unknown_destination(self, path4):
        tree, _ = flood_bfs(path4, 0)

        with pytest.raises(InputError):
            downcast(path4, tree, [(11, 1)], 1)

    def test_duplicate_ids_rejected(self):
        g = AttributedGraph.from_edges(3, [(0, 1), (1, 2)], labels=[4, 4, 5])

        with pytest.raises(InputError):
            node_ids(g)
