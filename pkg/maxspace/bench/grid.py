""" Experiment grids: (instance x algorithm x seed) cells run under a wall-clock limit """
import itertools
from pathlib import Path
from typing import Iterable, List, Mapping, Optional, Set, Tuple

import joblib
import pandas as pd

from maxspace.model import Instance, check_feasible
from maxspace.out import console, warning_console, with_progress
from ._models import RECORD_COLUMNS, AlgorithmSpec, RunRecord

Cell = Tuple[str, AlgorithmSpec, int]


def run_cell(instance_id: str, instance: Instance, spec: AlgorithmSpec, seed: int,
             limit: float) -> Tuple[RunRecord, Optional[str]]:
    """ Solve one cell; a crash becomes a failed record plus its message """
    cfg = spec.config.copy(update=dict(seed=seed, time_limit_seconds=limit))
    solver = spec.algorithm.solver(cfg, quiet=True)
    try:
        result = solver.solve(instance)
    except Exception as e:  # noqa: one failing cell never stops the grid
        return RunRecord.failed(instance_id, spec.label, seed), f"{type(e).__name__}: {e}"

    feasibility = check_feasible(result.schedule)
    if not feasibility.ok:
        return (
            RunRecord.failed(instance_id, spec.label, seed, result.elapsed),
            f"infeasible schedule: {feasibility.first_error.msg}"
        )
    return RunRecord(
        instance=instance_id, algorithm=spec.label, seed=seed, value=result.value,
        time_s=result.elapsed, iter_best=result.iteration_of_best, feasible=True
    ), None


def records_frame(records: Iterable[RunRecord]) -> pd.DataFrame:
    df = pd.DataFrame([r.as_row() for r in records], columns=list(RECORD_COLUMNS))
    return df.sort_values(["instance", "algorithm", "seed"], kind="mergesort").reset_index(drop=True)


def write_records(records: Iterable[RunRecord], location: Path):
    """ Sorted records CSV (UTF-8, LF endings) """
    records_frame(records).to_csv(location, index=False, lineterminator="\n", encoding="utf-8")


def _append(record: RunRecord, location: Path):
    header = not location.is_file() or location.stat().st_size == 0
    pd.DataFrame([record.as_row()], columns=list(RECORD_COLUMNS)).to_csv(
        location, mode="a", header=header, index=False, lineterminator="\n", encoding="utf-8"
    )


def read_records(location: Path) -> List[RunRecord]:
    df = pd.read_csv(location, dtype={"instance": str, "algorithm": str})
    missing = set(RECORD_COLUMNS) - set(df.columns)
    if missing:
        raise ValueError(f"{location} is missing columns {sorted(missing)}")
    return [
        RunRecord(
            instance=row["instance"], algorithm=row["algorithm"], seed=int(row["seed"]),
            value=int(row["value"]), time_s=float(row["time_s"]), iter_best=int(row["iter_best"]),
            feasible=str(row["feasible"]).lower() == "true"
        )
        for row in df.to_dict("records")
    ]


def run_grid(instances: Mapping[str, Instance], algorithms: List[AlgorithmSpec], seeds: Iterable[int],
             limit: float, *, out_csv: Optional[Path] = None, n_jobs: int = 1, resume: bool = False,
             show_progress: bool = False) -> List[RunRecord]:
    """ Run every (instance, algorithm, seed) cell

    Each finished cell is appended to ``out_csv`` as soon as it arrives (a single
    writer in this process); at the end the file is rewritten sorted by
    (instance, algorithm, seed). With ``resume`` cells already present in
    ``out_csv`` are not run again.
    """
    labels = [a.label for a in algorithms]
    if len(set(labels)) != len(labels):
        raise ValueError(f"algorithm labels must be unique, got {labels}")

    done: List[RunRecord] = []
    if out_csv is not None:
        out_csv = Path(out_csv)
        if resume and out_csv.is_file():
            done = read_records(out_csv)
        elif out_csv.is_file():
            out_csv.unlink()
    seen: Set[Tuple[str, str, int]] = {r.cell for r in done}

    cells: List[Cell] = [
        (inst_id, spec, seed)
        for inst_id, spec, seed in itertools.product(instances.keys(), algorithms, seeds)
        if (inst_id, spec.label, seed) not in seen
    ]
    if done:
        console.log(f"resuming grid: {len(done)} cells done, {len(cells)} to run")

    records = list(done)
    with with_progress(show=show_progress) as progress:
        task = progress.add_task("running grid", total=len(cells))
        results = joblib.Parallel(n_jobs=n_jobs, return_as="generator")(
            joblib.delayed(run_cell)(inst_id, instances[inst_id], spec, seed, limit)
            for inst_id, spec, seed in cells
        )
        for record, failure in results:
            if failure is not None:
                warning_console.log(f"{record.instance} / {record.algorithm} / seed {record.seed}: {failure}")
            if out_csv is not None:
                _append(record, out_csv)
            records.append(record)
            progress.update(task, advance=1)

    if out_csv is not None:
        write_records(records, out_csv)
    return sorted(records, key=lambda r: r.cell)
