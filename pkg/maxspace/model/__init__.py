from ._types import ProblemKind
from .ads import Ad, Instance
from .schedule import Schedule, DeltaRecord, primary_value, squared_slack, recomputed_loads
from .feasibility import check_feasible, Violation
from .validation_context import ValidationContext, ValidationError
