"""Tests for the round-synchronous simulator and its accounting."""

from __future__ import annotations

import random

import pytest

from rlcongest.congest import (
    NodeProgram,
    RecordCodec,
    RoundLog,
    StepKind,
    StepMeter,
    WordCodec,
    compare_words,
    metered_dense_rank,
    metered_sort,
    run,
    time_delta_polylog,
    unbounded_budget,
)
from rlcongest.exceptions import (
    BandwidthViolation,
    BudgetViolation,
    DisconnectedGraphError,
    InputError,
    ParameterError,
    ResourceError,
    SimulationError,
)


class Flood(NodeProgram):
    """Each node sends ``burst`` copies of its ID to every neighbor in round 1."""

    def __init__(self, burst: int = 1, steps: int = 0):
        self.burst = burst
        self.steps = steps

    def init(self, ctx):
        return {"heard": {}, "rounds_seen": []}

    def on_round(self, ctx, state, inbox):
        state["rounds_seen"].append(ctx.round)
        ctx.meter.charge(StepKind.WORD_OP, self.steps)
        if ctx.round == 1:
            return state, {v: [ctx.uid] * self.burst for v in ctx.neighbors}, False
        state["heard"] = {u: list(ws) for u, ws in inbox.items()}
        return state, {}, True


class NeverHalts(NodeProgram):
    def init(self, ctx):
        return 0

    def on_round(self, ctx, state, inbox):
        return state + 1, {}, False


class SendsAway(NodeProgram):
    def init(self, ctx):
        return None

    def on_round(self, ctx, state, inbox):
        return state, ({3: [1]} if ctx.node == 0 else {}), True


class Relay(NodeProgram):
    """Node 0 knows a rumor; a node forwards it once in the round it first hears it."""

    def init(self, ctx):
        return 1 if ctx.node == 0 else None

    def on_round(self, ctx, state, inbox):
        if state is None and inbox:
            state = ctx.round
        if state == ctx.round:
            return state, {v: [1] for v in ctx.neighbors}, True
        return state, {}, state is not None


class HaltsEarly(NodeProgram):
    """Node 0 keeps talking to node 1 after node 1 has halted."""

    def init(self, ctx):
        return None

    def on_round(self, ctx, state, inbox):
        if ctx.node == 0 and ctx.round < 3:
            return state, {1: [ctx.round]}, False
        return state, {}, True


class TestRun:
    """Tests for the executor contract."""

    def test_synchronous_delivery(self, path4):
        """Words sent in round 1 are read in round 2, one list per sender."""
        states, log = run(path4, Flood(), w=1)

        assert states[1]["heard"] == {0: [0], 2: [2]}
        assert states[0]["heard"] == {1: [1]}
        assert all(s["rounds_seen"] == [1, 2] for s in states)
        assert log.rounds == 2
        assert log.transmission_rounds == 1
        assert log.total_words == 2 * path4.m

    def test_one_hop_per_round(self, er_graphs):
        """A rumor reaches each node exactly one round after its hop distance."""
        from rlcongest.graph import hop_distances

        for g in er_graphs:
            learned, _ = run(g, Relay(), w=1)
            dist = hop_distances(g)[0]
            assert learned == [int(d) + 1 for d in dist]

    def test_random_bursts(self, er_graphs):
        """Seeded sweep: a violation is raised exactly when a burst exceeds w."""
        rng = random.Random(12)
        for _ in range(40):
            g = er_graphs[rng.randrange(len(er_graphs))]
            w = rng.randint(1, 6)
            burst = rng.randint(1, 9)
            if burst > w:
                with pytest.raises(BandwidthViolation):
                    run(g, Flood(burst=burst), w=w)
            else:
                _, log = run(g, Flood(burst=burst), w=w)
                assert log.max_edge_words == burst

    def test_bandwidth_violation(self, path4):
        with pytest.raises(BandwidthViolation) as exc:
            run(path4, Flood(burst=3), w=2)

        assert exc.value.round == 1
        assert exc.value.words == 3
        assert exc.value.width == 2

    def test_width_allows_burst(self, path4):
        _, log = run(path4, Flood(burst=3), w=3)

        assert log.max_edge_words == 3

    def test_budget_violation(self, path4):
        """Path of 4 under TIME(Δ log² n) with κ = 1 allows 2·2² = 8 steps."""
        run(path4, Flood(steps=8), w=1, budget=time_delta_polylog(1.0))
        with pytest.raises(BudgetViolation) as exc:
            run(path4, Flood(steps=9), w=1, budget=time_delta_polylog(1.0))

        assert exc.value.cap == 8

    def test_unbounded_budget(self, path4):
        _, log = run(path4, Flood(steps=10**6), w=1, budget=unbounded_budget())

        assert log.peak_node_steps == 10**6

    def test_non_neighbor_send(self, path4):
        with pytest.raises(SimulationError):
            run(path4, SendsAway(), w=1)

    def test_timeout_marks_log(self, path4):
        states, log = run(path4, NeverHalts(), w=1, max_rounds=5)

        assert log.timed_out
        assert log.rounds == 5
        assert states == [5, 5, 5, 5]

    def test_words_to_halted_nodes_are_dropped(self):
        from rlcongest.graph import gen_family

        _, log = run(gen_family("path", 2), HaltsEarly(), w=1)

        assert log.dropped_words == 2
        assert log.total_words == 2

    def test_parameter_checks(self, path4, two_triangles):
        with pytest.raises(ParameterError):
            run(path4, Flood(), w=0)
        with pytest.raises(ParameterError):
            run(path4, Flood(), w=1, max_rounds=-1)
        with pytest.raises(DisconnectedGraphError):
            run(two_triangles, Flood(), w=1)

    def test_threads_do_not_change_outcome(self, er_graphs):
        """Seeded sweep: one worker and four workers give identical runs."""
        for g in er_graphs:
            s1, log1 = run(g, Flood(burst=2), w=2, threads=1)
            s4, log4 = run(g, Flood(burst=2), w=2, threads=4)
            assert [s["heard"] for s in s1] == [s["heard"] for s in s4]
            assert log1.summary() == log4.summary()
            assert log1.edge_rows() == log4.edge_rows()


class TestRoundLog:
    """Tests for log accounting and phase concatenation."""

    def test_extend_offsets_by_transmission_rounds(self):
        first = RoundLog(width=1)
        first.record_words(1, 0, 1, 1)
        first.record_words(2, 1, 0, 1)
        first.rounds = 3
        second = RoundLog(width=1)
        second.record_words(1, 0, 1, 1)
        second.record_steps(1, 0, 4)
        second.rounds = 2

        first.extend(second, "later")

        assert first.transmission_rounds == 3
        assert first.steps[3] == {0: 4}
        assert first.rounds == 4
        assert first.phases == [("later", 1)]

    def test_charge_local_lands_after_last_receive(self):
        log = RoundLog(width=1)
        log.record_words(2, 0, 1, 1)

        assert log.charge_local(1, 7) == 7
        assert log.steps[3] == {1: 7}
        assert log.rounds == 3

    def test_edge_rows_are_canonical(self):
        log = RoundLog(width=2)
        log.record_words(1, 3, 1, 2)

        assert log.edge_rows() == [(1, 1, 3, "rev", 2)]


class TestMeteredPrimitives:
    """Tests for step-charged comparison, sorting and ranking."""

    def test_metered_sort_is_sorted_and_bounded(self):
        """Seeded sweep: at most n⌈log2 n⌉ comparisons."""
        import random

        for seed in range(8):
            rng = random.Random(seed)
            items = [rng.randrange(100) for _ in range(5 + 7 * seed)]
            meter = StepMeter()
            assert metered_sort(items, meter) == sorted(items)
            n = len(items)
            assert meter.counts[StepKind.COMPARE] <= n * max(1, (n - 1).bit_length())

    def test_dense_rank(self):
        meter = StepMeter()

        assert metered_dense_rank([30, 10, 30, 20], meter) == [3, 1, 3, 2]
        assert meter.total > 0

    def test_compare_words(self):
        meter = StepMeter()

        assert compare_words((1, 2, 3), (1, 2, 4), meter) == -1
        assert compare_words((1, 2), (1, 2), meter) == 0
        assert compare_words((1, 2, 0), (1, 2), meter) == 1


class TestWordCodec:
    """Tests for packing fields into one word."""

    def test_pack_unpack(self):
        codec = WordCodec.for_maxima([7, 1000, 1])

        assert codec.unpack(codec.pack(5, 999, 1)) == (5, 999, 1)

    def test_field_overflow(self):
        codec = WordCodec((3, 3))

        with pytest.raises(InputError):
            codec.pack(8, 0)

    def test_word_overflow(self):
        with pytest.raises(ResourceError):
            WordCodec((32, 32))


class TestRecordCodec:
    """Tests for records that pack when they fit and spread over words otherwise."""

    def test_packs_small_fields(self):
        codec = RecordCodec.for_maxima([1000, 1000, 99])

        assert codec.width == 1
        assert codec.decode(codec.encode(999, 3, 42)) == (999, 3, 42)

    def test_falls_back_to_one_word_per_field(self):
        """Two 25-bit IDs and a 17-bit color overflow a 63-bit word."""
        big = 320**3
        codec = RecordCodec.for_maxima([big, big, 320**2])

        record = codec.encode(big - 1, 5, 320**2 - 1)

        assert codec.width == 3
        assert record == (big - 1, 5, 320**2 - 1)
        assert codec.decode(record) == (big - 1, 5, 320**2 - 1)

    def test_split(self):
        codec = RecordCodec(2)

        assert codec.split([1, 2, 3, 4]) == [(1, 2), (3, 4)]
        with pytest.raises(InputError):
            codec.split([1, 2, 3])

    def test_unpacked_rejects_bad_fields(self):
        codec = RecordCodec(2)

        with pytest.raises(InputError):
            codec.encode(1)
        with pytest.raises(InputError):
            codec.encode(1, -2)

    def test_field_wider_than_a_word(self):
        with pytest.raises(ResourceError):
            RecordCodec.for_maxima([1 << 63])
