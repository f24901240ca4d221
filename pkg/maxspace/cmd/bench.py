import argparse
import json
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd
from rich.table import Table

from maxspace.bench import (
    AlgorithmSpec, PerformanceProfileExporter, TimeProfileExporter, WinTableExporter, calibrate_iterations,
    read_records, run_grid
)
from maxspace.misc import InvalidConfigError, InvalidInstanceError
from maxspace.model import Instance, ProblemKind
from maxspace.settings import get_settings
from maxspace.solvers import AlgorithmList
from .cli_lib import CMD
from .solve import read_instance_file

st = get_settings()


def parse_seeds(text: str) -> List[int]:
    """ '0', '0,3,7' or '0-4' """
    try:
        if "-" in text:
            first, last = (int(v) for v in text.split("-"))
            return list(range(first, last + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise InvalidConfigError(f"--seeds expects '0', '0,3,7' or '0-4', got {text!r}")


def collect_instances(paths: List[Path]) -> Dict[str, Instance]:
    """ Instance files and directories of ``*.inst`` files, keyed by file stem """
    files: List[Path] = []
    for p in paths:
        files.extend(sorted(p.glob("*.inst")) if p.is_dir() else [p])
    instances = {}
    for f in files:
        if f.stem in instances:
            raise InvalidConfigError(f"two instances named {f.stem}")
        instances[f.stem] = read_instance_file(f)
    if not instances:
        raise InvalidConfigError("no instance given")
    return instances


class Bench(CMD):
    """ Run an (instance x algorithm x seed) grid """
    COMMAND = "bench"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        parser.add_argument("instances", type=Path, nargs="+", help="instance files or directories")
        parser.add_argument("--algos", default="grasp,grasp-vns,grasp-tabu,vns",
                            help="comma separated algorithms (default: %(default)s)")
        parser.add_argument("--preset", choices=[k.value for k in ProblemKind],
                            help="parameter family, defaults to the family shared by the instances")
        parser.add_argument("--seeds", default=str(st.seed), help="'0', '0,3,7' or '0-4'")
        parser.add_argument("--time-limit", type=float, default=st.time_limit)
        parser.add_argument("-j", "--jobs", type=int, default=st.workers, help="grid cells run in parallel")
        parser.add_argument("-o", "--out", type=Path, default=st.results_path / "records.csv")
        parser.add_argument("--resume", action="store_true", help="skip cells already in the output CSV")
        parser.add_argument("-q", "--quiet", action="store_true")

    def run(self, argv: argparse.Namespace):
        """ Run every cell and write a records CSV (instance, algorithm, seed, value, time_s, iter_best, feasible) """
        instances = collect_instances(argv.instances)
        if argv.preset:
            kind = ProblemKind(argv.preset)
        else:
            kinds = {inst.effective_kind for inst in instances.values()}
            if len(kinds) > 1:
                raise InvalidConfigError("instances mix MAXSPACE and MAXSPACE-RDWV, pass --preset")
            kind = kinds.pop()

        try:
            algorithms = [AlgorithmList(a.strip()) for a in argv.algos.split(",")]
        except ValueError as e:
            raise InvalidConfigError(f"--algos: {e}")
        specs = [AlgorithmSpec.tuned(a, kind) for a in algorithms]

        argv.out.parent.mkdir(parents=True, exist_ok=True)
        records = run_grid(
            instances, specs, parse_seeds(argv.seeds), argv.time_limit, out_csv=argv.out,
            n_jobs=argv.jobs, resume=argv.resume, show_progress=not self.quiet
        )
        failed = sum(1 for r in records if not r.feasible)
        self.console.log(f"{len(records)} records written to {argv.out} ({failed} failed)")


def load_groups(manifest: Path) -> Dict[str, str]:
    """ instance id -> class label from a generator manifest """
    try:
        with manifest.open() as fp:
            data = json.load(fp)
        return {Path(e["file"]).stem: e["label"] for e in data["instances"]}
    except (OSError, ValueError, KeyError) as e:
        raise InvalidInstanceError(f"{manifest}: not a generator manifest ({e})")


def load_best_known(location: Path) -> Dict[str, int]:
    """ (instance, value) CSV of oracle optima """
    try:
        df = pd.read_csv(location, dtype={"instance": str})
        return {str(i): int(v) for i, v in zip(df["instance"], df["value"])}
    except (OSError, ValueError, KeyError) as e:
        raise InvalidInstanceError(f"{location}: expected an (instance, value) CSV ({e})")


class Profile(CMD):
    """ Performance profile, time profile and win table from a records CSV """
    COMMAND = "profile"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        parser.add_argument("records", type=Path)
        parser.add_argument("-o", "--out-dir", type=Path, default=None,
                            help="output directory (default: next to the records)")
        parser.add_argument("--by-class", type=Path, metavar="MANIFEST",
                            help="one performance profile per instance class of a generator manifest")
        parser.add_argument("--oracle", type=Path, help="CSV of best-known values (instance, value)")
        parser.add_argument("--calibrate", action="store_true",
                            help="print ceil(mean + 3 std) of the iteration of the best per algorithm")
        parser.add_argument("-q", "--quiet", action="store_true")

    def run(self, argv: argparse.Namespace):
        """ Write performance_profile.csv, time_profile.csv and win_table.csv """
        try:
            records = read_records(argv.records)
        except (OSError, ValueError) as e:
            raise InvalidInstanceError(f"{argv.records}: {e}")
        out_dir = argv.out_dir or argv.records.parent
        out_dir.mkdir(parents=True, exist_ok=True)

        group_by: Optional[Dict[str, str]] = load_groups(argv.by_class) if argv.by_class else None
        best_known = load_best_known(argv.oracle) if argv.oracle else None

        common = dict(records=records, quiet=self.quiet)
        PerformanceProfileExporter(
            output_file=out_dir / "performance_profile.csv", best_known=best_known, group_by=group_by, **common
        ).export()
        TimeProfileExporter(output_file=out_dir / "time_profile.csv", **common).export()
        WinTableExporter(output_file=out_dir / "win_table.csv", **common).export()

        if argv.calibrate:
            table = Table("algorithm", "iterations", header_style="bold magenta")
            for algo, count in calibrate_iterations(records).items():
                table.add_row(algo, str(count))
            self.console.print(table)
