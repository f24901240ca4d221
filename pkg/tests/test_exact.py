import io
import itertools
from typing import Dict

import numpy as np
import pulp
import pytest
from hypothesis import given, settings

from maxspace.exact import (
    IlpFormulation, ModelFormat, ad_choices, brute_force, build_lp, evaluate, export_ilp, schedule_assignment,
    search_space_size, violated
)
from maxspace.misc import InvalidInstanceError, SearchSpaceTooLarge
from maxspace.model import Ad, Instance, ProblemKind, check_feasible
from maxspace.construct import constructive
from maxspace.solvers import SolverConfig, best_improvement, tabu_search, vns

from conftest import TABLE1_OPTIMUM, maxspace_instance, tiny_instances


def naive_optimum(instance: Instance) -> int:
    """ Plain product over every ad's placements, no pruning """
    best = 0
    options = [ad_choices(ad, instance.capacity) for ad in instance.ads]
    for picks in itertools.product(*options):
        loads = [0] * (instance.slot_count + 1)
        for ad, choice in zip(instance.ads, picks):
            for j in choice:
                loads[j] += ad.size
        if max(loads) <= instance.capacity:
            best = max(best, sum(ad.value * len(choice) for ad, choice in zip(instance.ads, picks)))
    return best


class TestOracle:

    def test_table1(self, table1, data_dir):
        value, schedule = brute_force(table1)
        expected = int((data_dir / "table1.optimum").read_text().strip().split("=")[1])
        assert value == expected == TABLE1_OPTIMUM
        assert schedule.value == value
        assert check_feasible(schedule).ok

    def test_search_space_of_table1(self, table1):
        assert search_space_size(table1) == 5 ** 5 * 7 ** 2

    def test_oversized_ad_is_never_placed(self):
        value, schedule = brute_force(maxspace_instance((7,), (1,), 4, 6))
        assert value == 0
        assert schedule.placement[1] == []

    def test_ad_in_every_slot(self):
        ad = Ad(id=1, size=1, value=5, freq_min=4, freq_max=4, release=1, deadline=4)
        value, _ = brute_force(Instance(kind=ProblemKind.rdwv, slot_count=4, capacity=6, ads=[ad]))
        assert value == 20

    def test_empty_instance(self):
        value, schedule = brute_force(Instance(kind=ProblemKind.maxspace, slot_count=3, capacity=5, ads=[]))
        assert value == 0
        assert schedule.value == 0

    def test_guard(self):
        instance = maxspace_instance([3] * 30, [5] * 30, 10, 20)
        with pytest.raises(SearchSpaceTooLarge):
            brute_force(instance)

    def test_custom_limit(self, table1):
        with pytest.raises(SearchSpaceTooLarge):
            brute_force(table1, limit=1000)

    def test_rdwv_embedding_keeps_optimum(self, table1):
        assert brute_force(table1.as_rdwv())[0] == TABLE1_OPTIMUM

    @pytest.mark.slow
    def test_parallel_matches_serial(self, table1):
        serial = brute_force(table1)
        parallel = brute_force(table1, n_jobs=2)
        assert serial[0] == parallel[0]
        assert serial[1].state() == parallel[1].state()

    def test_choice_order(self):
        ad = Ad(id=1, size=2, value=1, freq_min=1, freq_max=2, release=1, deadline=3)
        assert ad_choices(ad, 6) == [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
        assert ad_choices(ad, 1) == [()]

    @settings(max_examples=60, deadline=None)
    @given(instance=tiny_instances(max_ads=4, max_slots=3))
    def test_matches_unpruned_enumeration(self, instance):
        value, schedule = brute_force(instance)
        assert value == naive_optimum(instance) == schedule.value
        assert check_feasible(schedule).ok


@settings(max_examples=25, deadline=None)
@given(instance=tiny_instances(max_ads=4, max_slots=3))
def test_heuristics_never_beat_the_oracle(instance):
    optimum, _ = brute_force(instance)
    cfg = SolverConfig(alpha=0.5, vns_max_no_improve=3, tabu_iterations=50, time_limit_seconds=10)
    rng = np.random.default_rng(1)
    start = constructive(instance, cfg.alpha, rng)
    for found in (start, best_improvement(start), vns(instance, cfg), tabu_search(start, cfg, rng)):
        assert check_feasible(found).ok
        assert found.value <= optimum


def coefficients(prob: pulp.LpProblem, name: str) -> Dict[str, float]:
    return {c["name"]: c["value"] for c in prob.constraints[name].toDict()["coefficients"]}


def _written(instance: Instance, which: IlpFormulation, fmt: ModelFormat = ModelFormat.lp) -> str:
    out = io.StringIO()
    export_ilp(instance, which, out, fmt)
    return out.getvalue()


class TestLp:

    def test_single_ad_single_slot(self):
        prob = build_lp(maxspace_instance((2,), (1,), 1, 6), IlpFormulation.maxspace)
        assert [v.name for v in prob.variables()] == ["x_1_1", "y_1"]
        assert all(v.cat == pulp.LpInteger and (v.lowBound, v.upBound) == (0, 1) for v in prob.variables())
        assert list(prob.constraints) == ["cap_1", "freq_1"]

    def test_window_rows(self):
        ad = Ad(id=1, size=2, value=3, freq_min=1, freq_max=1, release=2, deadline=2)
        prob = build_lp(Instance(kind=ProblemKind.rdwv, slot_count=3, capacity=6, ads=[ad]), IlpFormulation.rdwv)
        assert "win_1_1" in prob.constraints and "win_1_3" in prob.constraints
        assert "win_1_2" not in prob.constraints
        assert coefficients(prob, "freq_1") == {"x_1_2": 1, "y_1": -1}

    def test_frequency_range_rows(self):
        ad = Ad(id=1, size=2, value=3, freq_min=1, freq_max=3, release=1, deadline=3)
        prob = build_lp(Instance(kind=ProblemKind.rdwv, slot_count=3, capacity=6, ads=[ad]), IlpFormulation.rdwv)
        assert prob.constraints["fmin_1"].sense == pulp.LpConstraintGE
        assert coefficients(prob, "fmax_1")["y_1"] == -3

    def test_minspace_needs_maxspace_shape(self):
        ad = Ad(id=1, size=2, value=3, freq_min=1, freq_max=1, release=1, deadline=2)
        with pytest.raises(InvalidInstanceError):
            build_lp(Instance(kind=ProblemKind.rdwv, slot_count=2, capacity=6, ads=[ad]), IlpFormulation.minspace)

    def test_minspace_layout(self, table1):
        prob = build_lp(table1, IlpFormulation.minspace)
        assert prob.sense == pulp.LpMinimize
        height = {v.name: v for v in prob.variables()}["F"]
        assert height.cat == pulp.LpContinuous and height.lowBound == 0
        assert len(prob.constraints) == 4 + 7
        assert coefficients(prob, "height_1")["F"] == -1

    def test_header_carries_digest(self, table1):
        text = _written(table1, IlpFormulation.maxspace)
        assert text.startswith("\\ maxspace ILP\n")
        assert f"\\ instance md5: {table1.digest()}" in text
        assert "Maximize" in text and "Binaries" in text
        assert text.rstrip().endswith("End")

    def test_long_rows_stay_readable(self):
        text = _written(maxspace_instance([1] * 60, [1] * 60, 2, 100), IlpFormulation.maxspace)
        assert max(len(line) for line in text.splitlines()) <= 255
        for i in range(1, 61):
            assert f"x_{i}_1" in text

    def test_empty_instance_writes_no_undeclared_variable(self):
        text = _written(Instance(kind=ProblemKind.maxspace, slot_count=3, capacity=5, ads=[]),
                        IlpFormulation.maxspace)
        assert "x_0_0" not in text
        assert "cap_1" not in text
        assert text.rstrip().endswith("End")

    def test_mps_format(self, table1):
        text = _written(table1, IlpFormulation.maxspace, ModelFormat.mps)
        assert text.startswith("* maxspace ILP\n")
        assert "ROWS" in text and "COLUMNS" in text and "cap_1" in text
        assert text.rstrip().endswith("ENDATA")

    def test_optimum_is_feasible_in_the_model(self, table1):
        value, schedule = brute_force(table1)
        prob = build_lp(table1, IlpFormulation.maxspace)
        assignment = schedule_assignment(schedule)
        assert violated(prob, assignment) == []
        assert evaluate(prob, assignment) == value

    def test_overfull_assignment_is_rejected(self, table1):
        prob = build_lp(table1, IlpFormulation.maxspace)
        assignment = {"x_1_1": 1, "x_2_1": 1, "y_1": 1, "y_2": 1}
        assert "cap_1" in violated(prob, assignment)

    @settings(max_examples=30, deadline=None)
    @given(instance=tiny_instances(max_ads=4, max_slots=3))
    def test_rdwv_model_agrees_with_oracle(self, instance):
        value, schedule = brute_force(instance)
        prob = build_lp(instance, IlpFormulation.rdwv)
        assignment = schedule_assignment(schedule)
        assert violated(prob, assignment) == []
        assert evaluate(prob, assignment) == value
