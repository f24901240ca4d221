from .lp import (
    IlpFormulation, ModelFormat, build_lp, evaluate, export_ilp, schedule_assignment, violated, write_model
)
from .oracle import SEARCH_LIMIT, ad_choices, brute_force, search_space_size
