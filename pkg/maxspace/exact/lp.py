""" ILP formulations built as pulp problems, written in the CPLEX LP or MPS format

Variables are ``x_i_j`` (copy of ad i in slot j) and ``y_i`` (ad i scheduled),
both binary and 1-based, plus the continuous height ``F`` for MINSPACE.
Rows without terms are left out.
"""
import enum
import shutil
from typing import Dict, List, Mapping, Sequence, TextIO, Tuple

import pulp

from maxspace.misc import InvalidInstanceError
from maxspace.model import Instance, ProblemKind, Schedule
from maxspace.settings import get_settings

TOLERANCE = 1e-9

XVars = Dict[Tuple[int, int], pulp.LpVariable]


class IlpFormulation(str, enum.Enum):
    maxspace = "maxspace"
    minspace = "minspace"
    rdwv = "rdwv"


class ModelFormat(str, enum.Enum):
    lp = "lp"
    mps = "mps"

    @property
    def comment(self) -> str:
        return "\\" if self == ModelFormat.lp else "*"


def x(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def y(i: int) -> str:
    return f"y_{i}"


def _slots(instance: Instance) -> range:
    return range(1, instance.slot_count + 1)


def _x_vars(instance: Instance) -> XVars:
    return {
        (ad.id, j): pulp.LpVariable(x(ad.id, j), cat=pulp.LpBinary)
        for ad in instance.ads for j in _slots(instance)
    }


def _y_vars(instance: Instance) -> Dict[int, pulp.LpVariable]:
    return {ad.id: pulp.LpVariable(y(ad.id), cat=pulp.LpBinary) for ad in instance.ads}


def _add_capacity_rows(prob: pulp.LpProblem, instance: Instance, xs: XVars):
    if not instance.ads:
        return
    for j in _slots(instance):
        prob += pulp.lpSum(ad.size * xs[ad.id, j] for ad in instance.ads) <= instance.capacity, f"cap_{j}"


def _maxspace(instance: Instance) -> pulp.LpProblem:
    prob = pulp.LpProblem("maxspace", pulp.LpMaximize)
    xs, ys = _x_vars(instance), _y_vars(instance)
    prob += pulp.lpSum(ad.size * xs[ad.id, j] for ad in instance.ads for j in _slots(instance)), "obj"
    _add_capacity_rows(prob, instance, xs)
    for ad in instance.ads:
        copies = pulp.lpSum(xs[ad.id, j] for j in _slots(instance))
        prob += copies - ad.freq_min * ys[ad.id] == 0, f"freq_{ad.id}"
    return prob


def _rdwv(instance: Instance) -> pulp.LpProblem:
    prob = pulp.LpProblem("rdwv", pulp.LpMaximize)
    xs, ys = _x_vars(instance), _y_vars(instance)
    prob += pulp.lpSum(ad.value * xs[ad.id, j] for ad in instance.ads for j in _slots(instance)), "obj"
    _add_capacity_rows(prob, instance, xs)
    for ad in instance.ads:
        copies = pulp.lpSum(xs[ad.id, j] for j in range(ad.release, ad.deadline + 1))
        if ad.freq_min == ad.freq_max:
            prob += copies - ad.freq_min * ys[ad.id] == 0, f"freq_{ad.id}"
        else:
            prob += copies - ad.freq_min * ys[ad.id] >= 0, f"fmin_{ad.id}"
            prob += copies - ad.freq_max * ys[ad.id] <= 0, f"fmax_{ad.id}"
        for j in _slots(instance):
            if not ad.release <= j <= ad.deadline:
                prob += xs[ad.id, j] == 0, f"win_{ad.id}_{j}"
    return prob


def _minspace(instance: Instance) -> pulp.LpProblem:
    prob = pulp.LpProblem("minspace", pulp.LpMinimize)
    xs = _x_vars(instance)
    height = pulp.LpVariable("F", lowBound=0)
    prob += height, "obj"
    for j in _slots(instance):
        prob += pulp.lpSum(ad.size * xs[ad.id, j] for ad in instance.ads) - height <= 0, f"height_{j}"
    for ad in instance.ads:
        prob += pulp.lpSum(xs[ad.id, j] for j in _slots(instance)) == ad.freq_min, f"freq_{ad.id}"
    return prob


_BUILDERS = {
    IlpFormulation.maxspace: _maxspace,
    IlpFormulation.minspace: _minspace,
    IlpFormulation.rdwv: _rdwv,
}


def build_lp(instance: Instance, which: IlpFormulation) -> pulp.LpProblem:
    """ Build the formulation; MAXSPACE and MINSPACE need MAXSPACE-shaped ads """
    which = IlpFormulation(which)
    if which != IlpFormulation.rdwv and instance.effective_kind != ProblemKind.maxspace:
        raise InvalidInstanceError(
            f"{which.value} formulation needs fixed frequencies, value = size and full windows"
        )
    return _BUILDERS[which](instance)


def model_header(instance: Instance, which: IlpFormulation) -> List[str]:
    return [
        f"{IlpFormulation(which).value} ILP",
        f"instance md5: {instance.digest()}",
        f"n={instance.n} K={instance.slot_count} L={instance.capacity}",
    ]


def write_model(prob: pulp.LpProblem, out: TextIO, fmt: ModelFormat = ModelFormat.lp, *,
                header: Sequence[str] = ()):
    """ Write a pulp problem to a text sink, behind ``header`` comment lines """
    fmt = ModelFormat(fmt)
    tmp_dir = get_settings().mkdtemp(auto_clean=False)
    try:
        location = tmp_dir / f"model.{fmt.value}"
        if fmt == ModelFormat.lp:
            prob.writeLP(str(location))
        else:
            prob.writeMPS(str(location))
        for line in header:
            out.write(f"{fmt.comment} {line}\n")
        out.write(location.read_text(encoding="utf-8"))
    finally:
        shutil.rmtree(tmp_dir, ignore_errors=True)


def export_ilp(instance: Instance, which: IlpFormulation, out: TextIO, fmt: ModelFormat = ModelFormat.lp):
    """ Write the requested formulation of the instance to a text sink """
    write_model(build_lp(instance, which), out, fmt, header=model_header(instance, which))


def schedule_assignment(s: Schedule) -> Dict[str, int]:
    """ 0/1 values of x and y induced by a schedule """
    assignment = {}
    for i in range(1, s.n + 1):
        assignment[y(i)] = 1 if s.placement[i] else 0
        for j in s.placement[i]:
            assignment[x(i, j)] = 1
    return assignment


def _assign(prob: pulp.LpProblem, assignment: Mapping[str, float]):
    for var in prob.variables():
        var.varValue = assignment.get(var.name, 0)


def violated(prob: pulp.LpProblem, assignment: Mapping[str, float]) -> List[str]:
    """ Names of the rows an assignment does not satisfy (missing variables read as 0) """
    _assign(prob, assignment)
    return [name for name, row in prob.constraints.items() if not row.valid(TOLERANCE)]


def evaluate(prob: pulp.LpProblem, assignment: Mapping[str, float]) -> float:
    """ Objective value at an assignment (missing variables read as 0) """
    _assign(prob, assignment)
    return pulp.value(prob.objective) or 0
