from typing import List, Optional, Tuple

import joblib
import numpy as np

from maxspace.construct import constructive
from maxspace.misc import Deadline
from maxspace.model import Instance, Schedule
from .local_search import best_improvement
from .params import InnerSearch, SolverConfig
from .tabu import tabu_search
from .vns import vns


def iteration_rng(seed: int, iteration: int) -> np.random.Generator:
    """ Independent stream of one GRASP iteration """
    return np.random.default_rng(np.random.SeedSequence([seed, iteration]))


def grasp_iteration(instance: Instance, cfg: SolverConfig, inner: InnerSearch, iteration: int,
                    deadline: Deadline) -> Tuple[int, int, Schedule]:
    """ Construct then improve; returns (value, iteration, schedule) """
    rng = iteration_rng(cfg.seed, iteration)
    start = constructive(instance, cfg.alpha, rng)
    if inner == InnerSearch.vns:
        improved = vns(instance, cfg, rng, start=start, deadline=deadline)
    elif inner == InnerSearch.tabu:
        improved = tabu_search(start, cfg, rng, deadline=deadline)
    else:
        improved = best_improvement(start, deadline=deadline)
    return improved.value, iteration, improved


def grasp_run(instance: Instance, cfg: SolverConfig, inner: InnerSearch = InnerSearch.best_improve, *,
              deadline: Optional[Deadline] = None) -> Tuple[Schedule, int]:
    """ GRASP returning the incumbent and the iteration that last improved it """
    deadline = deadline or Deadline(cfg.time_limit_seconds)
    chunk = 1 if cfg.n_jobs == 1 else 2 * cfg.n_jobs
    incumbent: Optional[Schedule] = None
    best_iteration = 0

    iteration = 1
    # the first iteration always runs so a zero limit still yields a construction
    while iteration <= cfg.grasp_iterations and (iteration == 1 or not deadline.expired):
        batch = range(iteration, min(iteration + chunk, cfg.grasp_iterations + 1))
        if cfg.n_jobs == 1:
            results: List[Tuple[int, int, Schedule]] = [
                grasp_iteration(instance, cfg, inner, it, deadline) for it in batch
            ]
        else:
            results = joblib.Parallel(n_jobs=cfg.n_jobs)(
                joblib.delayed(grasp_iteration)(instance, cfg, inner, it, deadline) for it in batch
            )
        # results come in iteration order, strict comparison keeps the lowest index on ties
        for value, it, schedule in results:
            if incumbent is None or value > incumbent.value:
                incumbent = schedule
                best_iteration = it
        iteration += len(batch)
    return incumbent, best_iteration


def grasp(instance: Instance, cfg: SolverConfig, inner: InnerSearch = InnerSearch.best_improve, *,
          deadline: Optional[Deadline] = None) -> Schedule:
    """ Greedy randomized adaptive search

    Every iteration draws from its own stream seeded by (cfg.seed, iteration),
    so serial and parallel (``cfg.n_jobs`` > 1) runs return the same incumbent
    when the wall clock does not interrupt them.
    """
    return grasp_run(instance, cfg, inner, deadline=deadline)[0]
