""" Evaluation artifacts computed from run records """
import math
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from maxspace.misc import IncompleteGridError
from maxspace.out import warning_console
from ._models import RunRecord, ProfilePoint

# quality thresholds 0.00, 0.01, ..., 1.00
DEFAULT_THRESHOLDS: Sequence[float] = tuple(round(i / 100, 2) for i in range(101))
EPS = 1e-9


def _frame(records: Iterable[RunRecord]) -> pd.DataFrame:
    df = pd.DataFrame([r.dict() for r in records])
    if df.empty:
        raise ValueError("no records")
    return df


def best_over_seeds(records: Iterable[RunRecord], algorithms: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """ instance x algorithm table of the best value over seeds

    Failed runs count with value 0. Missing cells raise ``IncompleteGridError``.
    """
    df = _frame(records)
    table = df.pivot_table(index="instance", columns="algorithm", values="value", aggfunc="max")
    if algorithms is not None:
        table = table.reindex(columns=list(algorithms))
    missing = [(inst, algo) for inst in table.index for algo in table.columns if pd.isna(table.at[inst, algo])]
    if missing:
        raise IncompleteGridError(missing)
    return table.astype(int)


def _best_values(table: pd.DataFrame, best_known: Optional[Mapping[str, int]]) -> pd.Series:
    best = table.max(axis=1)
    if best_known:
        for inst, value in best_known.items():
            if inst in best.index:
                best[inst] = value
    return best


def performance_profile(records: Iterable[RunRecord], thresholds: Sequence[float] = DEFAULT_THRESHOLDS, *,
                        best_known: Optional[Mapping[str, int]] = None,
                        quiet: bool = False) -> Dict[str, List[ProfilePoint]]:
    """ Fraction of instances on which each algorithm reaches x times the best value

    The best value of an instance is the largest value over all algorithms
    (or ``best_known[instance]`` when given). Instances whose best is 0 are
    left out with a warning.
    """
    table = best_over_seeds(records)
    best = _best_values(table, best_known)
    empty = best[best <= 0].index.tolist()
    if empty:
        if not quiet:
            warning_console.log(f"{len(empty)} instance(s) with best value 0 left out of the profile: "
                                f"{', '.join(map(str, empty[:5]))}")
        table = table.drop(index=empty)
        best = best.drop(index=empty)
    if table.empty:
        raise ValueError("no instance with a positive best value")

    ratios = table.div(best, axis=0)
    xs = sorted(thresholds)
    profiles = {}
    for algo in table.columns:
        values = ratios[algo].to_numpy()
        profiles[algo] = [ProfilePoint(float(x), float(np.mean(values >= x - EPS))) for x in xs]
    return profiles


def grouped_performance_profile(records: Iterable[RunRecord], group_by: Mapping[str, str],
                                thresholds: Sequence[float] = DEFAULT_THRESHOLDS, *,
                                best_known: Optional[Mapping[str, int]] = None,
                                quiet: bool = False) -> Dict[str, Dict[str, List[ProfilePoint]]]:
    """ One performance profile per group of instances (``group_by`` maps instance to group) """
    groups: Dict[str, List[RunRecord]] = {}
    for r in records:
        if r.instance not in group_by:
            raise KeyError(f"instance {r.instance} has no group")
        groups.setdefault(group_by[r.instance], []).append(r)
    return {
        label: performance_profile(members, thresholds, best_known=best_known, quiet=quiet)
        for label, members in sorted(groups.items())
    }


def time_profile(records: Iterable[RunRecord]) -> Dict[str, List[ProfilePoint]]:
    """ Per algorithm, the fraction of runs finished within t, stepping at every observed time

    Failed runs never finish: they stay in the run count but add no step, so
    the curve of an algorithm with failures ends below 1.
    """
    df = _frame(records)
    profiles = {}
    for algo, group in df.groupby("algorithm", sort=True):
        times = np.sort(group.loc[group["feasible"], "time_s"].to_numpy())
        steps = np.unique(times)
        finished = np.searchsorted(times, steps, side="right")
        profiles[algo] = [ProfilePoint(float(t), float(c) / len(group)) for t, c in zip(steps, finished)]
    return profiles


def win_table(records: Iterable[RunRecord], algorithms: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """ Cell (A, B): number of instances where A found a strictly better value than B; empty diagonal """
    table = best_over_seeds(records, algorithms)
    labels = list(table.columns)
    columns = {
        b: [pd.NA if a == b else int((table[a] > table[b]).sum()) for a in labels]
        for b in labels
    }
    return pd.DataFrame(columns, index=labels).astype("Int64")


def calibrate_iterations(records: Iterable[RunRecord]) -> Dict[str, int]:
    """ Per algorithm, ceil(mean + 3 std) of the iteration at which the best was found

    Failed runs are ignored.
    """
    df = _frame(records)
    df = df[df["feasible"]]
    counts = {}
    for algo, group in df.groupby("algorithm", sort=True):
        its = group["iter_best"].to_numpy(dtype=float)
        counts[algo] = int(math.ceil(its.mean() + 3 * its.std()))
    return counts


def profile_frame(profiles: Mapping[str, List[ProfilePoint]]) -> pd.DataFrame:
    """ Long (algorithm, x, y) table """
    rows = [(algo, p.x, p.y) for algo, points in sorted(profiles.items()) for p in points]
    return pd.DataFrame(rows, columns=["algorithm", "x", "y"])


def win_frame(wins: pd.DataFrame) -> pd.DataFrame:
    """ Long (row, col, count) table without the diagonal """
    rows = [(a, b, int(wins.at[a, b])) for a in wins.index for b in wins.columns if a != b]
    return pd.DataFrame(rows, columns=["row", "col", "count"])
