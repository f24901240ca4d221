import pydantic
import pytest
from hypothesis import given, settings, strategies as st

from maxspace.misc import InfeasibleMoveError
from maxspace.model import (
    Ad, Instance, ProblemKind, Schedule, Violation, check_feasible, primary_value, recomputed_loads,
    squared_slack
)
from maxspace.neighborhoods import Add, Mv, Phase, neighborhood_order

from conftest import maxspace_instance, tiny_instances


def rdwv_ad(ad_id=1, size=2, value=1, freq_min=1, freq_max=1, release=1, deadline=4):
    return Ad(id=ad_id, size=size, value=value, freq_min=freq_min, freq_max=freq_max,
              release=release, deadline=deadline)


class TestAd:

    def test_plain_shape(self):
        ad = Ad.plain(1, 6, 3, 4)
        assert (ad.size, ad.value, ad.freq_min, ad.freq_max, ad.release, ad.deadline) == (6, 6, 3, 3, 1, 4)
        assert ad.is_plain(4)
        assert not ad.is_plain(5)

    @pytest.mark.parametrize("fields", [
        dict(freq_min=3, freq_max=2),
        dict(release=3, deadline=2),
        dict(freq_min=3, freq_max=3, release=2, deadline=3),
        dict(size=0),
        dict(size=-2),
        dict(value=0),
    ])
    def test_rejected(self, fields):
        with pytest.raises(pydantic.ValidationError):
            rdwv_ad(**fields)

    def test_window(self):
        assert rdwv_ad(release=2, deadline=3).window == 2


class TestInstance:

    def test_ids_must_be_contiguous(self):
        with pytest.raises(pydantic.ValidationError):
            Instance(kind=ProblemKind.rdwv, slot_count=4, capacity=6, ads=[rdwv_ad(ad_id=2)])

    def test_deadline_within_horizon(self):
        with pytest.raises(pydantic.ValidationError):
            Instance(kind=ProblemKind.rdwv, slot_count=3, capacity=6, ads=[rdwv_ad(deadline=4)])

    def test_maxspace_needs_plain_ads(self):
        with pytest.raises(pydantic.ValidationError):
            Instance(kind=ProblemKind.maxspace, slot_count=4, capacity=6, ads=[rdwv_ad(value=5)])

    def test_effective_kind(self, table1):
        assert table1.effective_kind == ProblemKind.maxspace
        assert table1.as_rdwv().kind == ProblemKind.rdwv
        assert table1.as_rdwv().effective_kind == ProblemKind.maxspace
        general = Instance(kind=ProblemKind.rdwv, slot_count=4, capacity=6, ads=[rdwv_ad(release=2)])
        assert general.effective_kind == ProblemKind.rdwv

    def test_digest_depends_on_content(self, table1):
        assert table1.digest() == maxspace_instance((6, 4, 2, 3, 1, 1, 5), (3, 2, 1, 2, 1, 1, 1), 4, 6).digest()
        assert table1.digest() != table1.as_rdwv().digest()


class TestObjectives:

    def test_empty_schedule(self, table1):
        s = Schedule(table1)
        assert s.value == primary_value(s) == 0
        assert s.slack == squared_slack(s) == 4 * 36

    def test_single_ad_value(self):
        instance = maxspace_instance((3,), (2,), 4, 6)
        s = Schedule.from_placement(instance, {1: [1, 2]})
        assert s.value == 6

    def test_full_slots_have_no_slack(self):
        instance = maxspace_instance((6,), (2,), 2, 6)
        assert Schedule.from_placement(instance, {1: [1, 2]}).slack == 0

    def test_slack_of_partial_loads(self):
        instance = maxspace_instance((6, 4), (1, 1), 2, 6)
        s = Schedule.from_placement(instance, {1: [1], 2: [2]})
        assert s.loads[1:] == [6, 4]
        assert s.slack == 4


class TestFeasibility:

    def test_feasible_example(self, table1_feasible):
        assert check_feasible(table1_feasible).ok

    def test_frequency_violation(self):
        instance = maxspace_instance((1,), (2,), 4, 6)
        ctx = check_feasible(Schedule.from_placement(instance, {1: [1]}))
        assert ctx.fails()
        assert ctx.first_error.item_name == Violation.frequency.value

    def test_window_violation(self):
        instance = Instance(kind=ProblemKind.rdwv, slot_count=4, capacity=6,
                            ads=[rdwv_ad(release=3, deadline=4)])
        ctx = check_feasible(Schedule.from_placement(instance, {1: [2]}))
        assert ctx.first_error.item_name == Violation.window.value

    def test_overflow_reported_first(self):
        instance = maxspace_instance((4, 4), (2, 2), 2, 6)
        ctx = check_feasible(Schedule.from_placement(instance, {1: [1, 2], 2: [1]}))
        assert ctx.first_error.item_name == Violation.overflow.value
        assert ctx.first_error.location == "slot 1"


class TestMoves:

    def test_add_delta(self):
        instance = Instance(kind=ProblemKind.rdwv, slot_count=4, capacity=6,
                            ads=[rdwv_ad(size=2, value=5, freq_min=1, freq_max=3)])
        s = Schedule(instance)
        record = s.apply(Add(1, (1, 2, 3)))
        assert record.value_delta == 15
        assert s.value == 15

    def test_mv_slack_delta(self):
        instance = maxspace_instance((2, 2, 4), (1, 1, 1), 2, 6)
        # source slack 0 -> 2, destination slack 4 -> 2
        s = Schedule.from_placement(instance, {1: [1], 3: [1], 2: [2]})
        record = s.apply(Mv(1, 1, 2))
        assert record.slack_delta == -8

    def test_rejected_move_leaves_schedule_untouched(self, table1_feasible):
        before = table1_feasible.state()
        with pytest.raises(InfeasibleMoveError):
            table1_feasible.apply(Add(2, (1, 2)))
        assert table1_feasible.state() == before

    def test_revert_restores_state(self, table1_feasible):
        before = table1_feasible.state()
        record = table1_feasible.apply(Add(5, (4,)))
        assert table1_feasible.value == 24
        table1_feasible.revert(record)
        assert table1_feasible.state() == before

    @settings(max_examples=60, deadline=None)
    @given(instance=tiny_instances(), data=st.data())
    def test_random_moves_keep_caches_exact(self, instance, data):
        s = Schedule(instance)
        order = neighborhood_order(instance)
        for _ in range(8):
            moves = [m for nb in order for m in nb.enumerate(s)]
            if not moves:
                break
            before = s.state()
            m = data.draw(st.sampled_from(moves))
            record = s.apply(m)
            assert check_feasible(s).ok
            assert s.value == primary_value(s)
            assert s.slack == squared_slack(s)
            assert s.loads == recomputed_loads(s)
            if data.draw(st.booleans()):
                s.revert(record)
                assert s.state() == before

    def test_copy_is_independent(self, table1_feasible):
        other = table1_feasible.copy()
        other.apply(Add(5, (4,)))
        assert table1_feasible.value == 23
        assert other.value == 24
        assert table1_feasible.tree.range_sum(1, 4) == 1
        assert other.tree.range_sum(1, 4) == 0

    def test_phase_other(self):
        assert Phase.minimize.other == Phase.maximize
