import abc
from typing import ClassVar, NamedTuple, Tuple

import humanize
from pydantic import BaseModel, root_validator

from maxspace.misc import Deadline
from maxspace.model import Instance, Schedule
from maxspace.out import console as out_console, void_console
from .params import SolverConfig


class SolveResult(NamedTuple):
    schedule: Schedule
    value: int
    iteration_of_best: int
    elapsed: float


class Solver(BaseModel, abc.ABC):
    """ Abstract definition of a solver """
    _name: ClassVar[str] = ...
    params: SolverConfig = SolverConfig()
    quiet: bool = False

    @property
    def name(self) -> str:
        return getattr(self, '_name')

    @property
    def console(self):
        """ Console to print output """
        if self.quiet:
            return void_console
        return out_console

    @root_validator(pre=True)
    def base_validation(cls, values):
        assert hasattr(cls, "_name"), f"A solver requires a name (add a _name attribute to the subclass {cls})"
        return values

    @abc.abstractmethod
    def run(self, instance: Instance, deadline: Deadline) -> Tuple[Schedule, int]:
        """ Best schedule found and the iteration it was found at """
        pass

    def solve(self, instance: Instance) -> SolveResult:
        deadline = Deadline(self.params.time_limit_seconds)
        schedule, iteration_of_best = self.run(instance, deadline)
        elapsed = deadline.elapsed
        self.console.log(
            f"{self.name}: value {schedule.value} found at iteration {iteration_of_best} "
            f"in {humanize.precisedelta(elapsed, minimum_unit='milliseconds')}"
        )
        return SolveResult(schedule, schedule.value, iteration_of_best, elapsed)
