from typing import List, NamedTuple, Tuple

from pydantic import BaseModel, validator

from maxspace.solvers import AlgorithmList, SolverConfig

# fixed column order of the records CSV
RECORD_COLUMNS: Tuple[str, ...] = ("instance", "algorithm", "seed", "value", "time_s", "iter_best", "feasible")


class RunRecord(BaseModel):
    """ Outcome of one (instance, algorithm, seed) cell """
    instance: str
    algorithm: str
    seed: int
    value: int
    time_s: float
    iter_best: int
    feasible: bool

    @validator("time_s")
    def rounded_time(cls, v):
        # microseconds survive the CSV round trip unchanged
        return round(float(v), 6)

    @property
    def cell(self) -> Tuple[str, str, int]:
        return self.instance, self.algorithm, self.seed

    def as_row(self) -> List:
        return [getattr(self, c) for c in RECORD_COLUMNS]

    @classmethod
    def failed(cls, instance: str, algorithm: str, seed: int, time_s: float = 0.0) -> "RunRecord":
        return cls(instance=instance, algorithm=algorithm, seed=seed, value=0, time_s=time_s,
                   iter_best=-1, feasible=False)


class AlgorithmSpec(BaseModel):
    """ An algorithm column of a grid: a label, a registered algorithm and its parameters """
    label: str
    algorithm: AlgorithmList
    config: SolverConfig = SolverConfig()

    @classmethod
    def tuned(cls, algorithm: AlgorithmList, kind, label: str = None, **overrides) -> "AlgorithmSpec":
        return cls(label=label or algorithm.value, algorithm=algorithm, config=algorithm.preset(kind, **overrides))


class ProfilePoint(NamedTuple):
    x: float
    y: float
