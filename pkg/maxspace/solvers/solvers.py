from typing import ClassVar, Tuple

import numpy as np

from maxspace.construct import constructive
from maxspace.misc import Deadline
from maxspace.model import Instance, Schedule
from ._model import Solver
from .grasp import grasp_run
from .params import InnerSearch
from .tabu import tabu_search_run
from .vns import vns_run


class ConstructiveSolver(Solver):
    """ Randomized greedy construction only """
    _name: ClassVar[str] = "constructive"

    def run(self, instance: Instance, deadline: Deadline) -> Tuple[Schedule, int]:
        return constructive(instance, self.params.alpha, np.random.default_rng(self.params.seed)), 0


class VNSSolver(Solver):
    """ Variable neighborhood search from a constructive start """
    _name: ClassVar[str] = "vns"

    def run(self, instance: Instance, deadline: Deadline) -> Tuple[Schedule, int]:
        return vns_run(instance, self.params, np.random.default_rng(self.params.seed), deadline=deadline)


class TabuSolver(Solver):
    """ Tabu search from a constructive start """
    _name: ClassVar[str] = "tabu"

    def run(self, instance: Instance, deadline: Deadline) -> Tuple[Schedule, int]:
        rng = np.random.default_rng(self.params.seed)
        start = constructive(instance, self.params.alpha, rng)
        return tabu_search_run(start, self.params, rng, deadline=deadline)


class GraspSolver(Solver):
    """ GRASP with best improvement, VNS or tabu search as local search """
    _name: ClassVar[str] = "grasp"
    inner: InnerSearch = InnerSearch.best_improve

    @property
    def name(self) -> str:
        if self.inner == InnerSearch.best_improve:
            return "grasp"
        return f"grasp-{self.inner.value}"

    def run(self, instance: Instance, deadline: Deadline) -> Tuple[Schedule, int]:
        return grasp_run(instance, self.params, self.inner, deadline=deadline)
