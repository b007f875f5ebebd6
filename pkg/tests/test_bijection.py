from fractions import Fraction

import pytest

from stoptime import (
    BinaryProcess,
    BorelSet,
    Filtration,
    INFINITY,
    Interval,
    Partition,
    RandomTime,
    RealProcess,
    RejectedInputError,
    SampleSpace,
    TimeGrid,
    enumerate_stopping_processes,
    enumerate_stopping_times,
    gen_adapted_real_process,
    gen_borel_set,
    gen_filtration,
    hitting_time,
    is_stopping_process,
    is_stopping_time,
    process_from_time,
    roundtrip_process,
    roundtrip_time,
    time_from_process,
)

ATOMS = ("a", "b", "c", "d")


def paths(x, f):
    return {a: tuple(x.values[t][a] for t in f.grid.times) for a in f.space.atoms}


class TestTimeFromProcess:
    def test_all_ones_never_stops(self, ref_filtration):
        x = BinaryProcess({t: {a: 1 for a in ATOMS} for t in (0, 1, 2)})
        rt = time_from_process(x, ref_filtration)
        assert rt == RandomTime({a: INFINITY for a in ATOMS})

    def test_all_zeros_stops_immediately(self, ref_filtration):
        x = BinaryProcess({t: {a: 0 for a in ATOMS} for t in (0, 1, 2)})
        rt = time_from_process(x, ref_filtration)
        assert rt == RandomTime({a: 0 for a in ATOMS})

    def test_first_zero_is_the_stopping_moment(self, ref_filtration):
        x = BinaryProcess(
            {
                0: {"a": 1, "b": 1, "c": 1, "d": 1},
                1: {"a": 0, "b": 0, "c": 1, "d": 1},
                2: {"a": 0, "b": 0, "c": 0, "d": 0},
            }
        )
        rt = time_from_process(x, ref_filtration)
        assert rt.values == {"a": 1, "b": 1, "c": 2, "d": 2}

    def test_result_is_always_a_stopping_time(self, ref_filtration):
        for x in enumerate_stopping_processes(ref_filtration):
            assert is_stopping_time(time_from_process(x, ref_filtration), ref_filtration)

    def test_non_stopping_input_rejected(self, ref_filtration):
        rising = BinaryProcess(
            {0: {a: 0 for a in ATOMS}, 1: {a: 1 for a in ATOMS}, 2: {a: 1 for a in ATOMS}}
        )
        with pytest.raises(RejectedInputError, match="not a stopping process"):
            time_from_process(rising, ref_filtration)


class TestProcessFromTime:
    def test_never_stopping_gives_all_ones(self, ref_filtration):
        x = process_from_time(RandomTime({a: INFINITY for a in ATOMS}), ref_filtration)
        assert paths(x, ref_filtration) == {a: (1, 1, 1) for a in ATOMS}

    def test_stopping_at_first_time_gives_all_zeros(self, ref_filtration):
        x = process_from_time(RandomTime({a: 0 for a in ATOMS}), ref_filtration)
        assert paths(x, ref_filtration) == {a: (0, 0, 0) for a in ATOMS}

    def test_indicator_of_strict_future(self, ref_filtration):
        rt = RandomTime({"a": 1, "b": 1, "c": INFINITY, "d": INFINITY})
        x = process_from_time(rt, ref_filtration)
        assert paths(x, ref_filtration)["a"] == (1, 0, 0)
        assert paths(x, ref_filtration)["c"] == (1, 1, 1)

    def test_result_is_always_a_stopping_process(self, ref_filtration):
        for rt in enumerate_stopping_times(ref_filtration):
            assert is_stopping_process(process_from_time(rt, ref_filtration), ref_filtration)

    def test_non_stopping_input_rejected(self, ref_filtration):
        peeking = RandomTime({"a": 0, "b": INFINITY, "c": INFINITY, "d": INFINITY})
        with pytest.raises(RejectedInputError, match="not a stopping time"):
            process_from_time(peeking, ref_filtration)


class TestRoundTrips:
    def test_both_identities_exhaustively(self, ref_filtration):
        for rt in enumerate_stopping_times(ref_filtration):
            assert roundtrip_time(rt, ref_filtration) == rt
        for x in enumerate_stopping_processes(ref_filtration):
            assert roundtrip_process(x, ref_filtration) == x

    def test_strict_future_indicator_identity(self, ref_filtration):
        # X_t = 1 exactly when the first-zero time lies strictly beyond t
        for x in enumerate_stopping_processes(ref_filtration):
            rt = time_from_process(x, ref_filtration)
            for t in ref_filtration.grid.times:
                for a in ATOMS:
                    assert (x.values[t][a] == 1) == (rt.values[a] > t)

    def test_distinct_processes_map_to_distinct_times(self, ref_filtration):
        times = [time_from_process(x, ref_filtration)
                 for x in enumerate_stopping_processes(ref_filtration)]
        for i in range(len(times)):
            for j in range(i + 1, len(times)):
                assert times[i] != times[j]


class TestHittingTime:
    def test_hitting_zero_equals_first_zero_time(self, ref_filtration):
        for x in enumerate_stopping_processes(ref_filtration):
            hit = hitting_time(x, BorelSet.point(0), ref_filtration)
            assert hit.time == time_from_process(x, ref_filtration)
            assert hit.verdict

    def test_never_hitting_means_infinity(self, ref_filtration):
        x = RealProcess({t: {a: 5 for a in ATOMS} for t in (0, 1, 2)})
        hit = hitting_time(x, BorelSet.point(0), ref_filtration)
        assert hit.time == RandomTime({a: INFINITY for a in ATOMS})
        assert hit.verdict

    def test_adapted_processes_yield_stopping_times(self):
        for seed in range(100):
            f = gen_filtration(seed, 5, 4)
            x = gen_adapted_real_process(seed + 1, f, (-2, 2))
            target = gen_borel_set(seed + 2)
            assert hitting_time(x, target, f).verdict

    def test_open_interval_respects_endpoints(self, ref_filtration):
        x = RealProcess(
            {0: {a: 1 for a in ATOMS}, 1: {a: 2 for a in ATOMS}, 2: {a: 3 for a in ATOMS}}
        )
        target = BorelSet([Interval(1, 3, lo_open=True, hi_open=True)])
        hit = hitting_time(x, target, ref_filtration)
        assert hit.time == RandomTime({a: 1 for a in ATOMS})

    def test_non_adapted_process_can_fail_the_verdict(self):
        space = SampleSpace(("a", "b"), {"a": Fraction(1, 2), "b": Fraction(1, 2)})
        grid = TimeGrid([0, 1])
        trivial = Partition.trivial(("a", "b"))
        f = Filtration(space, grid, [trivial, trivial], Partition.singletons(("a", "b")))
        sneaky = RealProcess({0: {"a": 0, "b": 1}, 1: {"a": 0, "b": 0}})
        hit = hitting_time(sneaky, BorelSet.point(0), f)
        assert hit.time == RandomTime({"a": 0, "b": 1})
        assert not hit.verdict
        assert "t=0" in hit.verdict.reason
