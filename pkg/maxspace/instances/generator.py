""" Random instance classes

Sizes, frequencies, profits and windows are drawn uniformly (integer
endpoints inclusive) from a PCG64 stream seeded with ``GeneratorSpec.seed``.
"""
import enum
import itertools
import json
from pathlib import Path
from typing import ClassVar, Dict, List, NamedTuple, Optional, Tuple

import joblib
import numpy as np
from pydantic import BaseModel, NonNegativeInt, PositiveInt, root_validator

from maxspace.misc import md5sum
from maxspace.model import Ad, Instance, ProblemKind
from maxspace.out import with_progress
from .codec import write_instance


class Dims(NamedTuple):
    n: int
    slot_count: int
    capacity: int


# (n, K, L) of the four random instance sizes
STANDARD_DIMS: Tuple[Dims, ...] = (
    Dims(100, 75, 50),
    Dims(500, 250, 100),
    Dims(1000, 500, 250),
    Dims(10000, 500, 200),
)


class SizeClass(str, enum.Enum):
    small = "small"
    medium = "medium"
    large = "large"

    def interval(self, capacity: int) -> Tuple[int, int]:
        if self == SizeClass.small:
            return 1, capacity // 4
        if self == SizeClass.medium:
            return capacity // 4 + 1, capacity // 2
        return capacity // 2 + 1, capacity


class FreqClass(str, enum.Enum):
    infrequent = "infrequent"
    medium = "medium-freq"
    very_frequent = "very-frequent"

    @property
    def min_interval(self) -> Tuple[int, int]:
        return _FREQ_INTERVALS[self][0]

    @property
    def max_interval(self) -> Tuple[int, int]:
        return _FREQ_INTERVALS[self][1]


_FREQ_INTERVALS: Dict[FreqClass, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    FreqClass.infrequent: ((1, 5), (6, 10)),
    FreqClass.medium: ((11, 15), (16, 20)),
    FreqClass.very_frequent: ((21, 25), (26, 30)),
}


class ProfitClass(str, enum.Enum):
    size_linked = "size-linked"
    random = "random"


class WindowClass(str, enum.Enum):
    none = "none"
    random = "random"


PROFIT_RANGE = (1, 100)


class GeneratorSpec(BaseModel):
    """ One instance class at given dimensions """
    kind: ProblemKind = ProblemKind.rdwv
    size_class: SizeClass
    freq_class: FreqClass
    profit_class: ProfitClass = ProfitClass.size_linked
    window_class: WindowClass = WindowClass.none
    n: NonNegativeInt
    slot_count: PositiveInt
    capacity: PositiveInt
    seed: NonNegativeInt = 0

    _ext: ClassVar[str] = ".inst"

    @root_validator(skip_on_failure=True)
    def feasible_class(cls, values):
        lo, hi = values["size_class"].interval(values["capacity"])
        if lo > hi:
            raise ValueError(f"size class {values['size_class'].value} is empty for L={values['capacity']}")

        slot_count = values["slot_count"]
        freq_floor = values["freq_class"].min_interval[0]
        if values["kind"] == ProblemKind.maxspace:
            if values["profit_class"] != ProfitClass.size_linked or values["window_class"] != WindowClass.none:
                raise ValueError("MAXSPACE classes have size-linked profits and no windows")
            if freq_floor > slot_count:
                raise ValueError(f"frequency class {values['freq_class'].value} needs K >= {freq_floor}")
        else:
            # a window [r, d] with d >= r + wmin needs wmin <= K - 1
            needed = freq_floor + (1 if values["window_class"] == WindowClass.random else 0)
            if needed > slot_count:
                raise ValueError(
                    f"frequency class {values['freq_class'].value} with window class "
                    f"{values['window_class'].value} needs K >= {needed}"
                )
        return values

    @property
    def label(self) -> str:
        if self.kind == ProblemKind.maxspace:
            return f"{self.size_class.value}-{self.freq_class.value}"
        return f"{self.size_class.value}-{self.freq_class.value}-{self.profit_class.value}-{self.window_class.value}"

    @property
    def dims(self) -> Dims:
        return Dims(self.n, self.slot_count, self.capacity)

    def with_seed(self, seed: int) -> "GeneratorSpec":
        return self.copy(update=dict(seed=seed))


def _draw(rng: np.random.Generator, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def _maxspace_ad(spec: GeneratorSpec, ad_id: int, rng: np.random.Generator) -> Ad:
    size = _draw(rng, *spec.size_class.interval(spec.capacity))
    lo = spec.freq_class.min_interval[0]
    hi = min(spec.freq_class.max_interval[1], spec.slot_count)
    return Ad.plain(ad_id, size, _draw(rng, lo, hi), spec.slot_count)


def _rdwv_ad(spec: GeneratorSpec, ad_id: int, rng: np.random.Generator) -> Ad:
    K = spec.slot_count
    windowed = spec.window_class == WindowClass.random
    size = _draw(rng, *spec.size_class.interval(spec.capacity))

    lo, hi = spec.freq_class.min_interval
    freq_min = _draw(rng, lo, min(hi, K - 1 if windowed else K))
    freq_max = max(freq_min, min(_draw(rng, *spec.freq_class.max_interval), K))

    value = size if spec.profit_class == ProfitClass.size_linked else _draw(rng, *PROFIT_RANGE)

    if windowed:
        release = _draw(rng, 1, K - freq_min)
        deadline = _draw(rng, release + freq_min, K)
    else:
        release, deadline = 1, K
    return Ad(id=ad_id, size=size, value=value, freq_min=freq_min, freq_max=freq_max,
              release=release, deadline=deadline)


def generate(spec: GeneratorSpec) -> Instance:
    """ Draw an instance of the class; the same spec always gives the same instance

    Per ad the draws are: size, then the frequency bounds, then the value, then
    the window (release first, deadline second).
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    make = _maxspace_ad if spec.kind == ProblemKind.maxspace else _rdwv_ad
    ads = [make(spec, ad_id, rng) for ad_id in range(1, spec.n + 1)]
    return Instance(kind=spec.kind, slot_count=spec.slot_count, capacity=spec.capacity, ads=ads)


def all_class_specs(dims: Dims, kind: ProblemKind = ProblemKind.rdwv, seed: int = 0) -> List[GeneratorSpec]:
    """ Every class combination at the given dimensions (36 for RDWV, 9 for MAXSPACE)

    Combinations that are infeasible for the dimensions are left out.
    """
    n, slot_count, capacity = dims
    if kind == ProblemKind.maxspace:
        combos = itertools.product(SizeClass, FreqClass, [ProfitClass.size_linked], [WindowClass.none])
    else:
        combos = itertools.product(SizeClass, FreqClass, ProfitClass, WindowClass)

    specs = []
    for size_class, freq_class, profit_class, window_class in combos:
        try:
            specs.append(GeneratorSpec(
                kind=kind, size_class=size_class, freq_class=freq_class, profit_class=profit_class,
                window_class=window_class, n=n, slot_count=slot_count, capacity=capacity, seed=seed
            ))
        except ValueError:
            continue
    return specs


def _generate_file(spec: GeneratorSpec, location: Path) -> Dict:
    instance = generate(spec)
    text = write_instance(instance)
    location.write_text(text, encoding="utf-8")
    return dict(
        file=location.name, label=spec.label, kind=spec.kind.value,
        n=spec.n, K=spec.slot_count, L=spec.capacity, seed=spec.seed,
        md5=md5sum(location),
    )


def generate_batch(specs: List[GeneratorSpec], count: int, base_seed: int, out_dir: Path, *,
                   n_jobs: int = 1, show_progress: bool = False) -> List[Path]:
    """ Write ``count`` instances per spec and a ``manifest.json`` describing them

    Instance i of a spec uses seed ``base_seed + i`` and is written to
    ``<label>_<n>_<i>.inst``.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs: List[Tuple[GeneratorSpec, Path]] = []
    for spec in specs:
        for i in range(count):
            jobs.append((spec.with_seed(base_seed + i), out_dir / f"{spec.label}_{spec.n}_{i}{spec._ext}"))

    entries: List[Dict] = []
    with with_progress(show=show_progress) as progress:
        task = progress.add_task("generating instances", total=len(jobs))
        results = joblib.Parallel(n_jobs=n_jobs, return_as="generator")(
            joblib.delayed(_generate_file)(spec, location) for spec, location in jobs
        )
        for entry in results:
            entries.append(entry)
            progress.update(task, advance=1)

    with (out_dir / "manifest.json").open("w") as fp:
        json.dump(dict(base_seed=base_seed, count=count, instances=entries), fp, indent=2)
    return [location for _, location in jobs]


def load_manifest(out_dir: Path) -> Optional[Dict]:
    location = Path(out_dir) / "manifest.json"
    if not location.is_file():
        return None
    with location.open() as fp:
        return json.load(fp)
