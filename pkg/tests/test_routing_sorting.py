"""Tests for token routing, sorting and ranking."""

from __future__ import annotations

import random
from collections import Counter

import pytest

from rlcongest.algos import (
    NO_RANK,
    Token,
    bitonic_layers,
    expander_route,
    expander_sort,
    node_ids,
    pad_key,
    routing_table,
    token_rank,
    validate_instance,
)
from rlcongest.algos.tokens import key_order
from rlcongest.congest import StepMeter
from rlcongest.exceptions import InputError, ParameterError
from rlcongest.graph import assign_random_ids, gen_connected_gnm, gen_family

BACKENDS = ["tree", "direct"]


def identities(placement):
    return Counter(t.identity() for tokens in placement for t in tokens)


def is_lane_sorted(g, placement):
    uids = node_ids(g)
    by_id = [placement[u] for u in sorted(range(g.n), key=lambda u: uids[u])]
    flat = [t for tokens in by_id for t in tokens]
    meter = StepMeter()
    return all(key_order(a, b, meter) <= 0 for a, b in zip(flat, flat[1:]))


def mixed_placement(g, seed, L, distinct=6):
    """Up to ``L`` tokens per node with keys repeated across nodes."""
    uids = node_ids(g)
    rng = random.Random(seed)
    return [
        [
            Token(pad_key([rng.randrange(distinct)], 2), tag=i, src=uids[u])
            for i in range(rng.randrange(L + 1))
        ]
        for u in range(g.n)
    ]


class TestBitonicLayers:
    """Tests for the comparator network."""

    def test_eight_lanes(self):
        layers = bitonic_layers(8)

        assert len(layers) == 6
        assert sum(len(layer) for layer in layers) == 24

    def test_sorts_every_input(self):
        """Seeded sweep: the pruned network sorts any lane count."""
        for lanes in range(2, 14):
            rng = random.Random(lanes)
            for _ in range(20):
                values = [rng.randrange(10) for _ in range(lanes)]
                for layer in bitonic_layers(lanes):
                    for lo, hi in layer:
                        if values[lo] > values[hi]:
                            values[lo], values[hi] = values[hi], values[lo]
                assert values == sorted(values)

    def test_one_lane(self):
        assert bitonic_layers(1) == []


class TestRouting:
    """Tests for point-to-point token delivery."""

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_shift_permutation(self, er_graphs, backend):
        """Every token reaches the node whose ID is its destination."""
        for g in er_graphs[:3]:
            uids = node_ids(g)
            placement = [
                [Token((u, u % 2), tag=u, src=uids[u], dst=uids[(u + 1) % g.n])] for u in range(g.n)
            ]
            routed, log = expander_route(g, placement, 2, 1, backend)
            assert identities(routed) == identities(placement)
            assert all(t.dst == uids[v] for v in range(g.n) for t in routed[v])
            assert log.transmission_rounds > 0

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_several_multiword_tokens_per_node(self, er_graphs, backend):
        """Seven-word tokens from every node cross branching trees intact at any width."""
        L = 3
        for g in [gen_family("complete", 8), *er_graphs[3:6]]:
            uids = node_ids(g)
            placement = [
                [
                    Token((u * 10 + j,), tag=j, src=uids[u], dst=uids[(u + j + 1) % g.n])
                    for j in range(L)
                ]
                for u in range(g.n)
            ]
            for w in (1, 3, 4, 8):
                routed, _ = expander_route(g, placement, w, L, backend)
                assert identities(routed) == identities(placement), (g.n, w)
                assert all(t.dst == uids[v] for v in range(g.n) for t in routed[v])
                assert all(len(routed[v]) == L for v in range(g.n))

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_random_ids(self, cycle6, backend):
        g = assign_random_ids(cycle6, 8)
        uids = node_ids(g)
        placement = [[] for _ in range(6)]
        placement[0] = [Token((1,), 0, uids[0], dst=uids[3]), Token((2,), 1, uids[0], dst=uids[5])]

        routed, _ = expander_route(g, placement, 1, 2, backend)

        assert [t.key for t in routed[3]] == [(1,)]
        assert [t.key for t in routed[5]] == [(2,)]
        assert routed[0] == []

    def test_staying_tokens_cost_nothing(self, path4):
        placement = [[Token((0,), u, u, dst=u)] for u in range(4)]

        routed, log = expander_route(path4, placement, 1, 1)

        assert routed == placement
        assert log.transmission_rounds == 0

    def test_destination_overload(self, path4):
        placement = [[Token((0,), u, u, dst=2)] for u in range(4)]

        with pytest.raises(InputError):
            validate_instance(path4, placement, 2)

    def test_bad_load_and_backend(self, path4):
        with pytest.raises(ParameterError):
            expander_route(path4, [[] for _ in range(4)], 1, 0)
        with pytest.raises(ParameterError):
            expander_route(path4, [[] for _ in range(4)], 1, 1, "flood")

    def test_routing_table_follows_shortest_paths(self, house):
        table = routing_table(house)

        assert table[0][2] == 1
        assert table[0][4] == 3
        assert table[4][4] == -1


class TestSorting:
    """Tests for distributed token sorting."""

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_lane_order_is_token_order(self, er_graphs, backend):
        g = er_graphs[0]
        uids = node_ids(g)
        rng = random.Random(4)
        placement = [
            [Token((rng.randrange(6), rng.randrange(3)), tag=i, src=uids[u]) for i in range(u % 3)]
            for u in range(g.n)
        ]

        ordered, _ = expander_sort(g, placement, 2, 2, backend)

        assert identities(ordered) == identities(placement)
        assert is_lane_sorted(g, ordered)

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_widths_not_dividing_token(self, er_graphs, backend):
        """Eight-word tokens sort correctly for w = 3 and w = 5."""
        g = er_graphs[2]
        placement = mixed_placement(g, 9, 3)
        for w in (3, 5):
            ordered, _ = expander_sort(g, placement, w, 3, backend)
            assert identities(ordered) == identities(placement)
            assert is_lane_sorted(g, ordered)

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_reverse_sorted(self, backend):
        """On P_8 with one token per node, the largest key moves from node 0 to node 7."""
        g = gen_family("path", 8)
        placement = [[Token((8 - u,), u, u)] for u in range(8)]

        ordered, _ = expander_sort(g, placement, 1, 1, backend)

        assert [[t.key for t in tokens] for tokens in ordered] == [[(u + 1,)] for u in range(8)]

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_already_sorted_stays_put(self, er_graphs, backend):
        g = er_graphs[1]
        uids = node_ids(g)
        placement = [[Token((uids[u],), 0, uids[u])] for u in range(g.n)]

        ordered, _ = expander_sort(g, placement, 2, 1, backend)

        assert [[t.identity() for t in tokens] for tokens in ordered] == [
            [t.identity() for t in tokens] for tokens in placement
        ]

    @pytest.mark.slow
    @pytest.mark.parametrize("backend", BACKENDS)
    def test_sixty_four_lanes(self, backend):
        """n = 64, L = 4, keys repeated across lanes."""
        g = gen_connected_gnm(64, 192, 5)
        placement = mixed_placement(g, 5, 4)

        ordered, _ = expander_sort(g, placement, 8, 4, backend)

        assert identities(ordered) == identities(placement)
        assert is_lane_sorted(g, ordered)
        assert all(len(tokens) <= 4 for tokens in ordered)

    def test_overloaded_node(self, path4):
        placement = [[Token((0,), i, 0) for i in range(3)], [], [], []]

        with pytest.raises(InputError):
            expander_sort(path4, placement, 1, 2)


class TestTokenRank:
    """Tests for distinct-key ranking."""

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_rank_counts_smaller_distinct_keys(self, er_graphs, backend):
        """Seeded sweep: each rank is the number of distinct keys below the token's key."""
        for seed, g in enumerate(er_graphs[:2]):
            uids = node_ids(g)
            rng = random.Random(seed)
            placement = [
                [Token(pad_key([rng.randrange(4)], 2), tag=u, src=uids[u])] for u in range(g.n)
            ]
            keys = sorted({t.key for tokens in placement for t in tokens})

            ranked, _ = token_rank(g, placement, 2, 1, backend)

            for u in range(g.n):
                assert len(ranked[u]) == 1
                t = ranked[u][0]
                assert t.identity() == placement[u][0].identity()
                assert t.rank == keys.index(t.key)

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_duplicates_across_lanes(self, er_graphs, backend):
        """Several tokens per node sharing keys with other nodes, at widths not dividing eight."""
        g = er_graphs[4]
        placement = mixed_placement(g, 2, 3, distinct=4)
        keys = sorted({t.key for tokens in placement for t in tokens})
        for w in (3, 5):
            ranked, _ = token_rank(g, placement, w, 3, backend)
            assert [identities([tokens]) for tokens in ranked] == [
                identities([tokens]) for tokens in placement
            ]
            assert all(t.rank == keys.index(t.key) for tokens in ranked for t in tokens)

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_reverse_sorted(self, backend):
        g = gen_family("path", 8)
        placement = [[Token((8 - u,), u, u)] for u in range(8)]

        ranked, _ = token_rank(g, placement, 1, 1, backend)

        assert [ranked[u][0].rank for u in range(8)] == [7 - u for u in range(8)]

    @pytest.mark.slow
    @pytest.mark.parametrize("backend", BACKENDS)
    def test_sixty_four_lanes(self, backend):
        """n = 64, L = 4, six keys spread over every lane."""
        g = gen_connected_gnm(64, 192, 7)
        placement = mixed_placement(g, 7, 4)
        keys = sorted({t.key for tokens in placement for t in tokens})

        ranked, _ = token_rank(g, placement, 8, 4, backend)

        assert identities(ranked) == identities(placement)
        for u in range(g.n):
            assert {t.identity() for t in ranked[u]} == {t.identity() for t in placement[u]}
            assert all(t.rank == keys.index(t.key) for t in ranked[u])

    def test_all_distinct_keys(self, cycle6):
        placement = [[Token((10 - u,), u, u)] for u in range(6)]

        ranked, _ = token_rank(cycle6, placement, 1, 1)

        assert [ranked[u][0].rank for u in range(6)] == [5, 4, 3, 2, 1, 0]

    def test_src_must_match_holder(self, path4):
        placement = [[Token((0,), 0, 3)], [], [], []]

        with pytest.raises(InputError):
            token_rank(path4, placement, 1, 1)

    def test_empty_placement(self, path4):
        ranked, log = token_rank(path4, [[] for _ in range(4)], 1, 1)

        assert ranked == [[], [], [], []]
        assert log.transmission_rounds == 0

    def test_default_rank_is_unset(self):
        assert Token((1,), 0, 0).rank == NO_RANK
