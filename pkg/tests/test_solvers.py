import numpy as np
import pydantic
import pytest
from hypothesis import given, settings

from maxspace.construct import constructive
from maxspace.exact import brute_force
from maxspace.instances import FreqClass, GeneratorSpec, SizeClass, WindowClass, generate
from maxspace.misc import Deadline, InvalidConfigError
from maxspace.model import Ad, Instance, ProblemKind, Schedule, check_feasible
from maxspace.solvers import (
    AlgorithmList, InnerSearch, SolverConfig, TabuList, TabuVersion, best_improvement, grasp, grasp_run,
    iteration_rng, shake, tabu_search, tabu_search_run, vnd, vns, vns_run
)
from maxspace.neighborhoods import NeighborhoodList

from conftest import TABLE1_OPTIMUM, maxspace_instance, tiny_instances


def quick(**overrides) -> SolverConfig:
    values = dict(time_limit_seconds=30, grasp_iterations=3, vns_max_no_improve=10, tabu_iterations=50)
    values.update(overrides)
    return SolverConfig(**values)


@pytest.fixture
def table1_optimal(table1) -> Schedule:
    return Schedule.from_placement(table1, {1: [1, 2, 3], 7: [4], 5: [4]})


class TestConfig:

    def test_shake_strength_bounds(self):
        with pytest.raises(pydantic.ValidationError):
            SolverConfig(q=0)
        with pytest.raises(pydantic.ValidationError):
            SolverConfig(q=11)

    def test_alpha_bounds(self):
        with pytest.raises(pydantic.ValidationError):
            SolverConfig(alpha=1.2)

    def test_presets(self):
        cfg = SolverConfig.preset("maxspace", "grasp-vns")
        assert (cfg.alpha, cfg.grasp_iterations, cfg.q) == (0.5, 1000, 10)
        cfg = AlgorithmList.grasp_tabu.preset("rdwv", seed=3)
        assert cfg.tabu_version == TabuVersion.cyclic
        assert (cfg.tabu_capacity, cfg.tabu_iterations, cfg.seed) == (100, 320, 3)

    def test_unknown_preset(self):
        with pytest.raises(InvalidConfigError):
            SolverConfig.preset("maxspace", "simulated-annealing")

    def test_yaml_round_trip(self, tmp_path):
        cfg = SolverConfig(alpha=0.25, q=7, tabu_version=TabuVersion.random, chg_budget=12)
        location = tmp_path / "solver.yaml"
        cfg.export(location)
        assert SolverConfig.load(location) == cfg

    def test_tabu_version_numbers(self):
        assert TabuVersion.from_number(1) == TabuVersion.random
        assert TabuVersion.from_number(3) == TabuVersion.cyclic
        with pytest.raises(ValueError):
            TabuVersion.from_number(4)


class TestVND:

    def test_reaches_optimum_from_feasible_start(self, table1_feasible):
        improved = vnd(table1_feasible)
        assert improved.value == TABLE1_OPTIMUM
        assert check_feasible(improved).ok
        # the start is left untouched
        assert table1_feasible.value == 23

    def test_local_optimum_is_a_fixed_point(self, table1_optimal):
        assert vnd(table1_optimal).state() == table1_optimal.state()

    def test_add_fires_on_empty_schedule(self):
        instance = maxspace_instance((2,), (2,), 3, 6)
        improved = vnd(Schedule(instance))
        assert improved.value == 4

    def test_best_improvement_reaches_optimum(self, table1_feasible):
        assert best_improvement(table1_feasible).value == TABLE1_OPTIMUM


class TestTabu:

    def test_tabu_list_is_fifo(self):
        tabu = TabuList(2)
        tabu.record(("ADD", 1))
        tabu.record(("MV", 2))
        tabu.record(("ADD", 1))
        assert ("ADD", 1) in tabu and ("MV", 2) in tabu
        tabu.record(("ADD", 3))
        assert ("MV", 2) not in tabu
        assert ("ADD", 1) in tabu
        assert len(tabu) == 2

    def test_optimal_start_keeps_value(self, table1_optimal):
        best = tabu_search(table1_optimal, quick(), np.random.default_rng(0))
        assert best.value == TABLE1_OPTIMUM
        assert check_feasible(best).ok

    @pytest.mark.parametrize("version", list(TabuVersion))
    def test_deterministic(self, table1, version):
        cfg = quick(tabu_version=version, alpha=1.0)
        start = constructive(table1, cfg.alpha, np.random.default_rng(5))
        first, it_first = tabu_search_run(start, cfg, np.random.default_rng(5))
        second, it_second = tabu_search_run(start, cfg, np.random.default_rng(5))
        assert first.state() == second.state()
        assert it_first == it_second
        assert first.value >= start.value

    def test_stalls_without_aspiration(self, table1_feasible):
        cfg = quick(tabu_capacity=100, aspiration=False, tabu_count_total=True)
        best = tabu_search(table1_feasible, cfg, np.random.default_rng(0))
        assert best.value >= table1_feasible.value


class TestVNS:

    def test_zero_limit_returns_construction(self, table1):
        cfg = quick(time_limit_seconds=0, alpha=1.0, seed=4)
        result, found_at = vns_run(table1, cfg)
        expected = constructive(table1, 1.0, np.random.default_rng(4))
        assert result.state() == expected.state()
        assert found_at == 0

    def test_deterministic_under_round_budget(self, table1):
        cfg = quick(alpha=1.0, seed=11)
        assert vns(table1, cfg).state() == vns(table1, cfg).state()

    def test_improves_given_start(self, table1, table1_feasible):
        assert vns(table1, quick(), start=table1_feasible).value == TABLE1_OPTIMUM

    def test_shake_applies_q_moves(self, table1_feasible):
        s = table1_feasible.copy()
        applied = shake(s, NeighborhoodList.mv.build(), 3, np.random.default_rng(0))
        # every slot is full except slot 4, and no copy fits there
        assert applied == 0
        assert s.state() == table1_feasible.state()

    def test_shake_adds_ads(self, table1):
        s = Schedule(table1)
        assert shake(s, NeighborhoodList.add.build(), 2, np.random.default_rng(0)) == 2
        assert len(list(s.scheduled_ads())) == 2

    def test_shake_stops_on_expired_deadline(self, table1):
        s = Schedule(table1)
        assert shake(s, NeighborhoodList.add.build(), 3, np.random.default_rng(0), Deadline(0)) == 0
        assert s.value == 0


class TestGrasp:

    def test_single_greedy_iteration(self, table1):
        cfg = quick(alpha=0.0, grasp_iterations=1, seed=2)
        result, found_at = grasp_run(table1, cfg)
        start = constructive(table1, 0.0, iteration_rng(2, 1))
        assert result.state() == best_improvement(start).state()
        assert found_at == 1

    def test_zero_limit_still_constructs(self, table1):
        cfg = quick(time_limit_seconds=0, alpha=0.0)
        result = grasp(table1, cfg, InnerSearch.vns)
        assert result.value == constructive(table1, 0.0, iteration_rng(cfg.seed, 1)).value

    def test_greedy_grasp_vns_reaches_optimum(self, table1):
        cfg = AlgorithmList.grasp_vns.preset("maxspace", alpha=0.0, grasp_iterations=3, time_limit_seconds=30)
        result = AlgorithmList.grasp_vns.solver(cfg, quiet=True).solve(table1)
        assert result.value == TABLE1_OPTIMUM
        assert result.iteration_of_best >= 1

    @pytest.mark.slow
    def test_parallel_matches_serial(self, table1):
        serial = grasp(table1, quick(alpha=1.0, grasp_iterations=4, seed=9))
        parallel = grasp(table1, quick(alpha=1.0, grasp_iterations=4, seed=9, n_jobs=2))
        assert serial.state() == parallel.state()


@pytest.mark.parametrize("algorithm", list(AlgorithmList))
def test_every_solver_returns_feasible_schedules(table1, algorithm):
    cfg = algorithm.preset("maxspace", grasp_iterations=2, time_limit_seconds=20, vns_max_no_improve=5,
                           tabu_iterations=50)
    solver = algorithm.solver(cfg, quiet=True)
    assert solver.name == algorithm.value
    result = solver.solve(table1)
    assert check_feasible(result.schedule).ok
    assert result.value == result.schedule.value <= TABLE1_OPTIMUM


def test_deadline():
    assert not Deadline(None).expired
    assert Deadline(0).expired


def busy_instance(seed: int = 3) -> Instance:
    """ Oversubscribed windowed instance whose neighborhoods take seconds to scan """
    spec = GeneratorSpec(size_class=SizeClass.small, freq_class=FreqClass.infrequent, window_class=WindowClass.random,
                         n=600, slot_count=100, capacity=50, seed=seed)
    return generate(spec)


def seeded_tiny_instance(seed: int) -> Instance:
    """ Oracle-sized instance drawn from a seed, MAXSPACE or RDWV """
    rng = np.random.default_rng(seed)
    slot_count = int(rng.integers(1, 5))
    capacity = int(rng.integers(1, 7))
    rdwv = bool(rng.integers(2))
    ads = []
    for ad_id in range(1, int(rng.integers(1, 6)) + 1):
        size = int(rng.integers(1, capacity + 2))
        if not rdwv:
            ads.append(Ad.plain(ad_id, size, int(rng.integers(1, slot_count + 1)), slot_count))
            continue
        release = int(rng.integers(1, slot_count + 1))
        deadline = int(rng.integers(release, slot_count + 1))
        window = deadline - release + 1
        freq_min = int(rng.integers(1, window + 1))
        freq_max = int(rng.integers(freq_min, window + 2))
        ads.append(Ad(id=ad_id, size=size, value=int(rng.integers(1, 11)), freq_min=freq_min, freq_max=freq_max,
                      release=release, deadline=deadline))
    kind = ProblemKind.rdwv if rdwv else ProblemKind.maxspace
    return Instance(kind=kind, slot_count=slot_count, capacity=capacity, ads=ads)


def small_budget(algorithm: AlgorithmList, **overrides) -> SolverConfig:
    values = dict(grasp_iterations=3, time_limit_seconds=30, vns_max_no_improve=5, tabu_iterations=50, seed=5)
    values.update(overrides)
    return algorithm.preset("maxspace", **values)


@settings(max_examples=20, deadline=None)
@given(instance=tiny_instances(max_ads=5, max_slots=4, rdwv=False))
def test_rdwv_declaration_keeps_values(instance):
    for algorithm in AlgorithmList:
        solver = algorithm.solver(small_budget(algorithm), quiet=True)
        assert solver.solve(instance).value == solver.solve(instance.as_rdwv()).value


@pytest.mark.parametrize("algorithm", list(AlgorithmList))
def test_same_seed_same_schedule(algorithm):
    spec = GeneratorSpec(size_class=SizeClass.medium, freq_class=FreqClass.infrequent,
                         window_class=WindowClass.random, n=25, slot_count=10, capacity=20, seed=8)
    instance = generate(spec)
    cfg = small_budget(algorithm, alpha=0.6, seed=13)
    first = algorithm.solver(cfg, quiet=True).solve(instance)
    second = algorithm.solver(cfg, quiet=True).solve(instance)
    assert first.schedule.state() == second.schedule.state()
    assert first.iteration_of_best == second.iteration_of_best


@pytest.mark.slow
@pytest.mark.parametrize("algorithm", list(AlgorithmList))
def test_time_limit_holds_on_large_neighborhoods(algorithm):
    instance = busy_instance()
    cfg = algorithm.preset("rdwv", time_limit_seconds=1, seed=1)
    result = algorithm.solver(cfg, quiet=True).solve(instance)
    assert result.elapsed < 2.5
    assert check_feasible(result.schedule).ok


@pytest.mark.slow
def test_grasp_vns_attains_the_oracle_optimum():
    hits = 0
    for seed in range(50):
        instance = seeded_tiny_instance(seed)
        optimum, _ = brute_force(instance)
        cfg = AlgorithmList.grasp_vns.preset(instance.kind, grasp_iterations=20, time_limit_seconds=10, seed=seed)
        hits += AlgorithmList.grasp_vns.solver(cfg, quiet=True).solve(instance).value == optimum
    assert hits >= 45


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(instance=tiny_instances(max_ads=5, max_slots=3))
def test_no_solver_beats_the_oracle(instance):
    optimum, _ = brute_force(instance)
    for algorithm in AlgorithmList:
        result = algorithm.solver(small_budget(algorithm), quiet=True).solve(instance)
        assert check_feasible(result.schedule).ok
        assert result.value <= optimum
