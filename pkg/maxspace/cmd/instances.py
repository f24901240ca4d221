import argparse
import sys
from pathlib import Path
from typing import List

from maxspace.instances import (
    BppClass, Dims, FreqClass, GeneratorSpec, ProfitClass, SizeClass, STANDARD_DIMS, WindowClass,
    all_class_specs, from_bpplib, generate_batch, write_instance
)
from maxspace.misc import InvalidConfigError, InvalidInstanceError
from maxspace.model import ProblemKind
from maxspace.settings import get_settings
from .cli_lib import CMD

st = get_settings()

# short spellings accepted by --class
FREQ_ALIASES = {"medium": "medium-freq"}
WINDOW_ALIASES = {"no-window": "none", "window": "random", "windowed": "random"}


def parse_dims(text: str) -> Dims:
    try:
        n, slot_count, capacity = (int(v) for v in text.split(","))
    except ValueError:
        raise InvalidConfigError(f"--dims expects 'n,K,L', got {text!r}")
    return Dims(n, slot_count, capacity)


def parse_class(text: str, kind: ProblemKind, dims: Dims) -> GeneratorSpec:
    """ 'size,freq[,profit,window]' to a spec """
    tokens = [t.strip().lower() for t in text.split(",")]
    if len(tokens) not in (2, 4):
        raise InvalidConfigError(f"--class expects 'size,freq[,profit,window]', got {text!r}")
    try:
        fields = dict(
            size_class=SizeClass(tokens[0]),
            freq_class=FreqClass(FREQ_ALIASES.get(tokens[1], tokens[1])),
        )
        if len(tokens) == 4:
            fields["profit_class"] = ProfitClass(tokens[2])
            fields["window_class"] = WindowClass(WINDOW_ALIASES.get(tokens[3], tokens[3]))
    except ValueError as e:
        raise InvalidConfigError(f"--class: {e}")
    return GeneratorSpec(kind=kind, n=dims.n, slot_count=dims.slot_count, capacity=dims.capacity, **fields)


class Generate(CMD):
    """ Generate random instances of one or all classes """
    COMMAND = "generate"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        parser.add_argument("--kind", choices=[k.value for k in ProblemKind], default=ProblemKind.rdwv.value)
        which = parser.add_mutually_exclusive_group(required=True)
        which.add_argument("--class", dest="class_", help="size,freq[,profit,window] e.g. small,infrequent,size-linked,no-window")
        which.add_argument("--all-classes", action="store_true", help="every class combination")
        dims = parser.add_mutually_exclusive_group(required=True)
        dims.add_argument("--dims", help="n,K,L")
        dims.add_argument("--size", type=int, choices=range(1, len(STANDARD_DIMS) + 1),
                          help="standard dimensions: " + ", ".join(
                              f"{i}=({d.n},{d.slot_count},{d.capacity})" for i, d in enumerate(STANDARD_DIMS, 1)))
        parser.add_argument("--count", type=int, default=10, help="instances per class (default: %(default)s)")
        parser.add_argument("--seed", type=int, default=st.seed, help="base seed, instance i uses seed + i")
        parser.add_argument("-o", "--out", type=Path, default=None, help="output directory")
        parser.add_argument("-j", "--jobs", type=int, default=st.workers)
        parser.add_argument("-q", "--quiet", action="store_true")

    def run(self, argv: argparse.Namespace):
        """ Write instance files and a manifest.json into the output directory """
        kind = ProblemKind(argv.kind)
        dims = parse_dims(argv.dims) if argv.dims else STANDARD_DIMS[argv.size - 1]
        if argv.count < 1:
            raise InvalidConfigError("--count must be >= 1")

        if argv.all_classes:
            specs: List[GeneratorSpec] = all_class_specs(dims, kind)
        else:
            specs = [parse_class(argv.class_, kind, dims)]
        out_dir = argv.out or st.instances_path / f"{kind.value}_{dims.n}_{dims.slot_count}_{dims.capacity}"

        files = generate_batch(specs, argv.count, argv.seed, out_dir, n_jobs=argv.jobs,
                               show_progress=not self.quiet)
        self.console.log(f"{len(files)} instances of {len(specs)} class(es) written to {out_dir}")


class Convert(CMD):
    """ Convert a BPPLIB cutting-stock file to a MAXSPACE instance """
    COMMAND = "convert"
    NAMESPACE = ""

    def init_parser(self, parser: argparse.ArgumentParser):
        parser.add_argument("source", type=Path, help="BPPLIB CSP or BPP text file")
        parser.add_argument("--falkenauer-triples", action="store_true",
                            help="K = ceil(total demand / 3) instead of ceil(total length / L)")
        parser.add_argument("-o", "--output", type=Path, help="instance file (default: stdout)")
        parser.add_argument("-q", "--quiet", action="store_true")

    def run(self, argv: argparse.Namespace):
        hint = BppClass.falkenauer_triples if argv.falkenauer_triples else BppClass.other
        try:
            text = argv.source.read_text(encoding="utf-8")
        except OSError as e:
            raise InvalidInstanceError(f"{argv.source}: {e.strerror or e}")
        try:
            instance = from_bpplib(text, hint, quiet=self.quiet)
        except InvalidInstanceError as e:
            raise InvalidInstanceError(f"{argv.source}: {e}")

        if argv.output is None:
            sys.stdout.write(write_instance(instance))
            return
        argv.output.write_text(write_instance(instance), encoding="utf-8")
        self.console.log(f"n={instance.n} K={instance.slot_count} L={instance.capacity} written to {argv.output}")
