import argparse
import sys
from pathlib import Path

from maxspace.exact import SEARCH_LIMIT, IlpFormulation, ModelFormat, brute_force, export_ilp
from maxspace.instances import load_instance, read_solution, write_solution
from maxspace.misc import InfeasibleScheduleError, InvalidInstanceError
from maxspace.model import Instance, ProblemKind, Schedule, check_feasible
from maxspace.settings import get_settings
from maxspace.solvers import AlgorithmList, SolverConfig, TabuVersion
from .cli_lib import CMD, ExitCode, abort

st = get_settings()


def read_instance_file(location: Path) -> Instance:
    """ Load an instance, naming the file in any error """
    try:
        return load_instance(location)
    except InvalidInstanceError as e:
        raise InvalidInstanceError(f"{location}: {e}")
    except OSError as e:
        raise InvalidInstanceError(f"{location}: {e.strerror or e}")


def emit_solution(s: Schedule, location: Path):
    location.write_text(write_solution(s), encoding="utf-8")


def add_config_flags(parser: argparse.ArgumentParser):
    """ Flags mirroring SolverConfig; unset flags keep the preset / file value """
    group = parser.add_argument_group("solver parameters")
    group.add_argument("--alpha", type=float, help="greediness of the restricted candidate list in [0, 1]")
    group.add_argument("--iterations", dest="grasp_iterations", type=int, help="GRASP iterations")
    group.add_argument("--q", type=int, help="VNS shake strength")
    group.add_argument("--tabu-capacity", type=int, help="tabu list length")
    group.add_argument("--tabu-iterations", type=int, help="tabu iterations without improvement per phase")
    group.add_argument("--tabu-version", type=int, choices=[1, 2, 3],
                       help="neighborhood selection: 1 random, 2 stay until no improvement, 3 cyclic")
    group.add_argument("--chg-budget", type=int, help="cap on CHG pairs examined per ad")
    group.add_argument("--seed", type=int, default=st.seed, help="random seed (default: %(default)s)")
    group.add_argument("--time-limit", type=float, default=st.time_limit,
                       help="wall-clock limit in seconds (default: %(default)s)")
    group.add_argument("-j", "--jobs", type=int, default=st.workers, help="parallel GRASP iterations")


def build_config(args: argparse.Namespace, algorithm: AlgorithmList) -> SolverConfig:
    if args.config is not None:
        values = SolverConfig.load(args.config).dict()
    elif args.preset is not None:
        values = algorithm.preset(ProblemKind(args.preset)).dict()
    else:
        values = SolverConfig().dict()

    overrides = dict(
        alpha=args.alpha, grasp_iterations=args.grasp_iterations, q=args.q,
        tabu_capacity=args.tabu_capacity, tabu_iterations=args.tabu_iterations,
        tabu_version=TabuVersion.from_number(args.tabu_version) if args.tabu_version else None,
        chg_budget=args.chg_budget, seed=args.seed, time_limit_seconds=args.time_limit, n_jobs=args.jobs,
    )
    values.update({k: v for k, v in overrides.items() if v is not None})
    return SolverConfig(**values)


class Solve(CMD):
    """ Solve an instance with a metaheuristic """
    COMMAND = "solve"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        parser.add_argument("instance", type=Path)
        parser.add_argument("--algo", required=True, choices=[a.value for a in AlgorithmList])
        parser.add_argument("--preset", choices=[k.value for k in ProblemKind],
                            help="tuned parameters for the problem family")
        parser.add_argument("--config", type=Path, help="YAML file with solver parameters")
        parser.add_argument("--dump-config", type=Path, help="write the effective parameters as YAML")
        parser.add_argument("--emit-solution", type=Path, help="write the schedule to this file")
        parser.add_argument("-q", "--quiet", action="store_true")
        add_config_flags(parser)

    def run(self, argv: argparse.Namespace):
        """ Solve an instance and print `value=<int> time_s=<real> iter_best=<int>` on stdout """
        if argv.config is not None and argv.preset is not None:
            abort("--config and --preset are exclusive", ExitCode.usage)
        algorithm = AlgorithmList(argv.algo)
        config = build_config(argv, algorithm)
        instance = read_instance_file(argv.instance)

        if argv.dump_config:
            config.export(argv.dump_config)

        solver = algorithm.solver(config, quiet=self.quiet)
        result = solver.solve(instance)

        feasibility = check_feasible(result.schedule)
        if feasibility.fails():
            raise InfeasibleScheduleError(f"{algorithm.value} returned an infeasible schedule", ctx=feasibility)

        schedule, capacity = result.schedule, instance.capacity
        fullest, high = schedule.tree.max_load_slot(1, instance.slot_count)
        emptiest, low = schedule.tree.min_load_slot(1, instance.slot_count)
        self.console.log(
            f"fullest slot {fullest} ({high}/{capacity}), emptiest slot {emptiest} ({low}/{capacity}), "
            f"squared slack {schedule.slack}"
        )

        if argv.emit_solution:
            emit_solution(result.schedule, argv.emit_solution)
        print(f"value={result.value} time_s={result.elapsed:.3f} iter_best={result.iteration_of_best}")


class Oracle(CMD):
    """ Exact optimum of a tiny instance by exhaustive search """
    COMMAND = "oracle"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        parser.add_argument("instance", type=Path)
        parser.add_argument("--limit", type=int, default=SEARCH_LIMIT,
                            help="largest search space accepted (default: %(default)s)")
        parser.add_argument("-j", "--jobs", type=int, default=st.workers)
        parser.add_argument("--emit-solution", type=Path)
        parser.add_argument("-q", "--quiet", action="store_true")

    def run(self, argv: argparse.Namespace):
        """ Enumerate every schedule of a tiny instance and print `value=<int>` """
        instance = read_instance_file(argv.instance)
        with self.console.status("enumerating schedules"):
            value, schedule = brute_force(instance, limit=argv.limit, n_jobs=argv.jobs)
        if argv.emit_solution:
            emit_solution(schedule, argv.emit_solution)
        print(f"value={value}")


class ExportIlp(CMD):
    """ Write the ILP formulation of an instance in LP or MPS format """
    COMMAND = "export-ilp"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        parser.add_argument("instance", type=Path)
        parser.add_argument("--formulation", choices=[f.value for f in IlpFormulation],
                            help="defaults to the family of the instance")
        parser.add_argument("--format", choices=[f.value for f in ModelFormat], default=ModelFormat.lp.value)
        parser.add_argument("-o", "--output", type=Path, help="model file (default: stdout)")

    def run(self, argv: argparse.Namespace):
        instance = read_instance_file(argv.instance)
        if argv.formulation is None:
            which = IlpFormulation(instance.effective_kind.value)
        else:
            which = IlpFormulation(argv.formulation)

        if argv.output is None:
            export_ilp(instance, which, sys.stdout, ModelFormat(argv.format))
            return
        with argv.output.open("w", encoding="utf-8") as fp:
            export_ilp(instance, which, fp, ModelFormat(argv.format))
        self.console.log(f"{which.value} ILP written to {argv.output}")


class Check(CMD):
    """ Validate a solution file against an instance """
    COMMAND = "check"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        parser.add_argument("instance", type=Path)
        parser.add_argument("solution", type=Path)

    def run(self, argv: argparse.Namespace):
        instance = read_instance_file(argv.instance)
        try:
            text = argv.solution.read_text(encoding="utf-8")
        except OSError as e:
            raise InvalidInstanceError(f"{argv.solution}: {e.strerror or e}")
        schedule = read_solution(instance, text)

        feasibility = check_feasible(schedule)
        if feasibility.fails():
            raise InvalidInstanceError(f"{argv.solution}: infeasible schedule", ctx=feasibility)
        print(f"feasible value={schedule.value}")
