import itertools
from typing import Optional, Tuple

import numpy as np

from maxspace.construct import constructive
from maxspace.misc import Deadline
from maxspace.model import Instance, Schedule
from maxspace.neighborhoods import Neighborhood, neighborhood_order
from .local_search import two_phase, vnd_descent
from .params import SolverConfig


def shake(s: Schedule, nb: Neighborhood, q: int, rng: np.random.Generator,
          deadline: Optional[Deadline] = None) -> int:
    """ Apply q moves drawn uniformly from the feasible moves of one neighborhood

    Each draw counts the moves in one pass and walks to the drawn index in a
    second. Draws from an empty neighborhood are skipped; an expired
    ``deadline`` stops shaking. Returns the number applied.
    """
    applied = 0
    for _ in range(q):
        count = sum(1 for _ in nb.enumerate(s, deadline))
        if deadline is not None and deadline.expired:
            break
        if count == 0:
            continue
        drawn = next(itertools.islice(nb.enumerate(s), int(rng.integers(count)), None))
        s.apply(drawn)
        applied += 1
    return applied


def vns_run(instance: Instance, cfg: SolverConfig, rng: Optional[np.random.Generator] = None, *,
            start: Optional[Schedule] = None, deadline: Optional[Deadline] = None) -> Tuple[Schedule, int]:
    """ VNS returning the best schedule and the shake round that produced it (0 for the descent of the start) """
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)
    deadline = deadline or Deadline(cfg.time_limit_seconds)
    order = neighborhood_order(instance, cfg.chg_budget)

    def descent(sch, phase):
        return vnd_descent(sch, order, phase, deadline)

    current = start.copy() if start is not None else constructive(instance, cfg.alpha, rng)
    if deadline.expired:
        return current, 0
    two_phase(current, descent, deadline)

    k = 0
    rounds = 0
    without_improvement = 0
    best_round = 0
    while not deadline.expired and without_improvement < cfg.vns_max_no_improve:
        rounds += 1
        candidate = current.copy()
        shake(candidate, order[k], cfg.q, rng, deadline)
        two_phase(candidate, descent, deadline)
        if candidate.value > current.value:
            current = candidate
            best_round = rounds
            k = 0
            without_improvement = 0
        else:
            k = (k + 1) % len(order)
            without_improvement += 1
    return current, best_round


def vns(instance: Instance, cfg: SolverConfig, rng: Optional[np.random.Generator] = None, *,
        start: Optional[Schedule] = None, deadline: Optional[Deadline] = None) -> Schedule:
    """ Variable neighborhood search

    Starts from ``start`` or from the constructive heuristic, then repeats:
    shake with ``cfg.q`` random moves of neighborhood k, descend with VND under
    the two-phase alternation, keep the result only if its value is strictly
    higher. Stops on the wall clock or after ``cfg.vns_max_no_improve``
    consecutive rounds without improvement.
    """
    return vns_run(instance, cfg, rng, start=start, deadline=deadline)[0]
