from collections import Counter, deque
from typing import List, Optional, Tuple

import numpy as np

from maxspace.misc import Deadline
from maxspace.model import Schedule
from maxspace.neighborhoods import Move, Neighborhood, Phase, neighborhood_order
from maxspace.neighborhoods._model import Signature
from .params import SolverConfig, TabuVersion


class TabuList:
    """ Bounded FIFO of move signatures (move kind and ad ids) """

    def __init__(self, capacity: int):
        self.capacity = capacity
        self._fifo = deque()
        self._counts = Counter()

    def record(self, signature: Signature):
        self._fifo.append(signature)
        self._counts[signature] += 1
        if len(self._fifo) > self.capacity:
            expired = self._fifo.popleft()
            self._counts[expired] -= 1
            if self._counts[expired] == 0:
                del self._counts[expired]

    def __contains__(self, signature: Signature) -> bool:
        return signature in self._counts

    def __len__(self):
        return len(self._fifo)


def _run(start: Schedule, cfg: SolverConfig, rng: np.random.Generator, deadline: Deadline,
         order: List[Neighborhood]) -> Tuple[Schedule, int]:
    current = start.copy()
    best = start.copy()
    best_iteration = 0
    tabu = TabuList(cfg.tabu_capacity)
    iteration = 0

    def admissible(m: Move, value_delta: int) -> bool:
        if m.signature not in tabu:
            return True
        return cfg.aspiration and current.value + value_delta > best.value

    while not deadline.expired:
        cycle_improved = False
        for phase in (Phase.minimize, Phase.maximize):
            k = 0
            stalled = 0
            performed = 0
            while not deadline.expired:
                budget_used = performed if cfg.tabu_count_total else stalled
                if budget_used >= cfg.tabu_iterations:
                    break
                iteration += 1
                performed += 1
                if cfg.tabu_version == TabuVersion.random:
                    k = int(rng.integers(len(order)))

                chosen = order[k].best_move(current, phase, admissible, deadline)
                moved_up = False
                if chosen is not None:
                    current.apply(chosen.move)
                    tabu.record(chosen.move.signature)
                    moved_up = chosen.score > 0

                if current.value > best.value:
                    best = current.copy()
                    best_iteration = iteration
                    stalled = 0
                    cycle_improved = True
                else:
                    stalled += 1

                if cfg.tabu_version == TabuVersion.cyclic or (cfg.tabu_version == TabuVersion.stay and not moved_up):
                    k = (k + 1) % len(order)
        if not cycle_improved:
            break
    return best, best_iteration


def tabu_search_run(start: Schedule, cfg: SolverConfig, rng: np.random.Generator, *,
                    deadline: Optional[Deadline] = None) -> Tuple[Schedule, int]:
    """ Tabu search returning the best schedule and the iteration it was found at """
    deadline = deadline or Deadline(cfg.time_limit_seconds)
    order = neighborhood_order(start.instance, cfg.chg_budget)
    return _run(start, cfg, rng, deadline, order)


def tabu_search(start: Schedule, cfg: SolverConfig, rng: np.random.Generator, *,
                deadline: Optional[Deadline] = None) -> Schedule:
    """ Move-based tabu search with the two-phase alternation

    Each iteration picks a neighborhood (random, stay until no improvement, or
    cyclic per ``cfg.tabu_version``), applies its best admissible move even if
    it worsens the schedule, and records the move signature. A phase ends after
    ``cfg.tabu_iterations`` iterations without a new global best.
    """
    return tabu_search_run(start, cfg, rng, deadline=deadline)[0]
