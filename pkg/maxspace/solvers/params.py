import enum
import json
from pathlib import Path
from typing import ClassVar, Dict, Optional, Any

import yaml
from pydantic import BaseModel, confloat, conint

from maxspace.misc import InvalidConfigError, load_obj
from maxspace.model import ProblemKind


class TabuVersion(str, enum.Enum):
    """ Neighborhood selection rule of the tabu search """
    random = "random"
    stay = "stay-until-no-improve"
    cyclic = "cyclic"

    @classmethod
    def from_number(cls, number: int) -> "TabuVersion":
        """ Versions are numbered 1 (random), 2 (stay) and 3 (cyclic) """
        try:
            return (cls.random, cls.stay, cls.cyclic)[number - 1]
        except IndexError:
            raise ValueError(f"tabu version must be 1, 2 or 3, got {number}")


class InnerSearch(str, enum.Enum):
    """ Improvement method run on each GRASP construction """
    best_improve = "best-improve"
    vns = "vns"
    tabu = "tabu"


class SolverConfig(BaseModel):
    """ Parameters shared by every solver """
    file_stem: ClassVar[str] = "solver.yaml"
    alpha: confloat(ge=0, le=1) = 0.3
    grasp_iterations: conint(ge=1) = 2000
    # shake strength
    q: conint(ge=1, le=10) = 5
    tabu_capacity: conint(ge=5, le=100) = 55
    tabu_iterations: conint(ge=50, le=500) = 60
    tabu_version: TabuVersion = TabuVersion.stay
    time_limit_seconds: confloat(ge=0) = 600.0
    seed: conint(ge=0) = 0
    # tabu moves reaching a new global best stay allowed
    aspiration: bool = True
    # stop tabu phases after tabu_iterations in total instead of without improvement
    tabu_count_total: bool = False
    # shake rounds without improvement before VNS stops (the wall clock may stop it earlier)
    vns_max_no_improve: conint(ge=1) = 50
    chg_budget: Optional[conint(ge=1)] = None
    n_jobs: conint(ge=1) = 1

    @classmethod
    def preset(cls, kind: ProblemKind, algorithm: str, **overrides) -> "SolverConfig":
        """ Tuned parameters for an algorithm on a problem family """
        try:
            values = dict(PRESETS[ProblemKind(kind)][algorithm])
        except (KeyError, ValueError):
            raise InvalidConfigError(f"no preset for algorithm '{algorithm}' on {kind}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def export(self, file: Path):
        # conversion order self -> json -> pydict -> yaml, json serializes the enums
        as_obj = json.loads(self.json())
        with file.open('w') as fp:
            yaml.dump(as_obj, fp)

    @classmethod
    def load(cls, file: Path) -> "SolverConfig":
        return cls.parse_obj(load_obj(file))


PRESETS: Dict[ProblemKind, Dict[str, Dict[str, Any]]] = {
    ProblemKind.maxspace: {
        "constructive": dict(alpha=0.3),
        "vns": dict(alpha=0.2, q=8),
        "grasp": dict(alpha=0.3, grasp_iterations=2000),
        "grasp-tabu": dict(
            alpha=0.9, grasp_iterations=2000, tabu_capacity=55, tabu_iterations=60,
            tabu_version=TabuVersion.stay
        ),
        "grasp-vns": dict(alpha=0.5, grasp_iterations=1000, q=10),
        "tabu": dict(alpha=0.9, tabu_capacity=55, tabu_iterations=60, tabu_version=TabuVersion.stay),
    },
    ProblemKind.rdwv: {
        "constructive": dict(alpha=0.3),
        "vns": dict(alpha=0.0, q=5),
        "grasp": dict(alpha=0.3, grasp_iterations=2000),
        "grasp-tabu": dict(
            alpha=0.2, grasp_iterations=2000, tabu_capacity=100, tabu_iterations=320,
            tabu_version=TabuVersion.cyclic
        ),
        "grasp-vns": dict(alpha=0.2, grasp_iterations=2000, q=9),
        "tabu": dict(alpha=0.2, tabu_capacity=100, tabu_iterations=320, tabu_version=TabuVersion.cyclic),
    },
}
