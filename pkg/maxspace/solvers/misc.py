import enum
from typing import Any, Dict, Type

from maxspace.model import ProblemKind
from ._model import Solver
from .params import InnerSearch, SolverConfig
from .solvers import ConstructiveSolver, GraspSolver, TabuSolver, VNSSolver


class AlgorithmList(str, enum.Enum):
    """ Registry of runnable algorithms """

    def __new__(cls, label: str, solver: Type[Solver], inner: InnerSearch = None):
        """ Allow setting parameters on enum """
        obj = str.__new__(cls, label)
        obj._value_ = label
        obj._solver = solver
        obj._inner = inner
        return obj

    constructive = "constructive", ConstructiveSolver
    vns = "vns", VNSSolver
    tabu = "tabu", TabuSolver
    grasp = "grasp", GraspSolver, InnerSearch.best_improve
    grasp_vns = "grasp-vns", GraspSolver, InnerSearch.vns
    grasp_tabu = "grasp-tabu", GraspSolver, InnerSearch.tabu

    @property
    def solver_cls(self) -> Type[Solver]:
        return self._solver

    def solver(self, config: SolverConfig, quiet: bool = False) -> Solver:
        kwargs: Dict[str, Any] = dict(params=config, quiet=quiet)
        if self._inner is not None:
            kwargs["inner"] = self._inner
        return self._solver(**kwargs)

    def preset(self, kind: ProblemKind, **overrides) -> SolverConfig:
        return SolverConfig.preset(kind, self.value, **overrides)
