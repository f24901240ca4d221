from ._model import Solver, SolveResult
from .grasp import grasp, grasp_run, iteration_rng
from .local_search import vnd, best_improvement, two_phase
from .misc import AlgorithmList
from .params import SolverConfig, TabuVersion, InnerSearch, PRESETS
from .solvers import ConstructiveSolver, VNSSolver, TabuSolver, GraspSolver
from .tabu import TabuList, tabu_search, tabu_search_run
from .vns import vns, vns_run, shake
