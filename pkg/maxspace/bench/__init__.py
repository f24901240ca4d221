from ._models import RECORD_COLUMNS, RunRecord, AlgorithmSpec, ProfilePoint
from .exporters import (
    ResultExporter, RecordsExporter, PerformanceProfileExporter, TimeProfileExporter, WinTableExporter
)
from .grid import run_grid, run_cell, read_records, write_records, records_frame
from .profiles import (
    DEFAULT_THRESHOLDS, best_over_seeds, performance_profile, grouped_performance_profile, time_profile,
    win_table, calibrate_iterations, profile_frame, win_frame
)
