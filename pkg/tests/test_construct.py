from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from maxspace.construct import ad_costs, constructive, first_fit
from maxspace.model import Ad, Instance, ProblemKind, Schedule, check_feasible

from conftest import maxspace_instance, tiny_instances


def test_first_fit_places_in_leading_slots(table1):
    s = Schedule(table1)
    assert first_fit(s, 1)
    assert s.placement[1] == [1, 2, 3]


def test_first_fit_discards_oversized_ad():
    instance = maxspace_instance((7,), (1,), 4, 6)
    s = Schedule(instance)
    assert not first_fit(s, 1)
    assert s.value == 0


def test_first_fit_capped_by_window():
    ad = Ad(id=1, size=2, value=1, freq_min=1, freq_max=3, release=2, deadline=3)
    s = Schedule(Instance(kind=ProblemKind.rdwv, slot_count=4, capacity=6, ads=[ad]))
    assert first_fit(s, 1)
    assert s.placement[1] == [2, 3]


def test_first_fit_all_or_nothing_for_fixed_frequency():
    instance = maxspace_instance((6, 3), (3, 2), 4, 6)
    s = Schedule(instance)
    first_fit(s, 1)
    # only slot 4 is left for an ad needing two copies
    assert not first_fit(s, 2)
    assert s.placement[2] == []


def test_table1_costs(table1):
    assert ad_costs(table1)[1:] == [18, 8, 2, 6, 1, 1, 5]


def test_rdwv_costs_are_exact_ratios():
    ads = [
        Ad(id=1, size=3, value=1, freq_min=1, freq_max=1, release=1, deadline=2),
        Ad(id=2, size=6, value=2, freq_min=1, freq_max=2, release=1, deadline=2),
    ]
    costs = ad_costs(Instance(kind=ProblemKind.rdwv, slot_count=2, capacity=6, ads=ads))
    assert costs[1] == costs[2] == Fraction(1, 3)


def test_greedy_order_with_alpha_zero(table1):
    # A1 (18) then A2 (8) then A4 (6) then A7 (5) ...
    s = constructive(table1, 0.0, np.random.default_rng(123))
    assert s.placement[1] == [1, 2, 3]
    assert s.placement[2] == []
    assert s.placement[7] == [4]
    assert s.value == 24


def test_alpha_zero_ignores_seed():
    instance = maxspace_instance((5, 4, 3, 2, 1), (1, 2, 1, 2, 1), 3, 6)
    results = {constructive(instance, 0.0, np.random.default_rng(seed)).state() for seed in range(10)}
    assert len(results) == 1


def test_alpha_outside_range(table1):
    with pytest.raises(ValueError):
        constructive(table1, 1.5, np.random.default_rng(0))


def test_alpha_one_varies_with_seed(table1):
    values = {constructive(table1, 1.0, np.random.default_rng(seed)).state() for seed in range(30)}
    assert len(values) > 1


@settings(max_examples=60, deadline=None)
@given(instance=tiny_instances(), alpha=st.sampled_from([0.0, 0.2, 0.5, 1.0]), seed=st.integers(0, 2 ** 32))
def test_construction_is_feasible_and_deterministic(instance, alpha, seed):
    first = constructive(instance, alpha, np.random.default_rng(seed))
    second = constructive(instance, alpha, np.random.default_rng(seed))
    assert check_feasible(first).ok
    assert first.state() == second.state()
