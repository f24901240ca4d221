import abc
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd
from pydantic import BaseModel

from maxspace.out import console, void_console
from ._models import RunRecord
from .grid import write_records
from .profiles import (
    DEFAULT_THRESHOLDS, grouped_performance_profile, performance_profile, profile_frame, time_profile,
    win_frame, win_table
)


class CSVExporter(abc.ABC):

    @abc.abstractmethod
    def to_csv(self):
        pass


def _write(df: pd.DataFrame, location: Path):
    df.to_csv(location, index=False, lineterminator="\n", encoding="utf-8", float_format="%.6g")


class ResultExporter(BaseModel, abc.ABC):
    records: List[RunRecord]
    output_file: Path
    quiet: bool = False

    @property
    def console(self):
        if not self.quiet:
            return console
        return void_console

    def export(self):
        if isinstance(self, CSVExporter):
            self.to_csv()
        self.console.log(f"wrote {self.output_file}")


class RecordsExporter(ResultExporter, CSVExporter):

    def to_csv(self):
        write_records(self.records, self.output_file)


class PerformanceProfileExporter(ResultExporter, CSVExporter):
    """ (algorithm, x, y) rows, or (group, algorithm, x, y) when a grouping is given """
    thresholds: List[float] = list(DEFAULT_THRESHOLDS)
    best_known: Optional[Dict[str, int]] = None
    group_by: Optional[Dict[str, str]] = None

    def to_csv(self):
        if self.group_by is None:
            df = profile_frame(performance_profile(
                self.records, self.thresholds, best_known=self.best_known, quiet=self.quiet
            ))
        else:
            grouped = grouped_performance_profile(
                self.records, self.group_by, self.thresholds, best_known=self.best_known, quiet=self.quiet
            )
            df = pd.concat(
                [profile_frame(profiles).assign(group=label) for label, profiles in grouped.items()],
                ignore_index=True
            )[["group", "algorithm", "x", "y"]]
        _write(df, self.output_file)


class TimeProfileExporter(ResultExporter, CSVExporter):

    def to_csv(self):
        _write(profile_frame(time_profile(self.records)).rename(columns={"x": "t"}), self.output_file)


class WinTableExporter(ResultExporter, CSVExporter):
    algorithms: Optional[List[str]] = None

    def to_csv(self):
        _write(win_frame(win_table(self.records, self.algorithms)), self.output_file)
