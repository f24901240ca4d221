from pathlib import Path

import pytest
from hypothesis import strategies as st

from maxspace.instances import load_instance
from maxspace.model import Ad, Instance, ProblemKind, Schedule

DATA = Path(__file__).parent / "data"

# sizes and frequencies of the seven ads of the reference example, L=6, K=4
TABLE1_SIZES = (6, 4, 2, 3, 1, 1, 5)
TABLE1_FREQS = (3, 2, 1, 2, 1, 1, 1)
TABLE1_OPTIMUM = 24


def maxspace_instance(sizes, freqs, slot_count, capacity) -> Instance:
    ads = [Ad.plain(i, s, w, slot_count) for i, (s, w) in enumerate(zip(sizes, freqs), start=1)]
    return Instance(kind=ProblemKind.maxspace, slot_count=slot_count, capacity=capacity, ads=ads)


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def table1() -> Instance:
    return maxspace_instance(TABLE1_SIZES, TABLE1_FREQS, 4, 6)


@pytest.fixture
def table1_file() -> Path:
    return DATA / "table1.inst"


@pytest.fixture
def table1_feasible(table1) -> Schedule:
    """ A1 in slots 1-3 and A7 in slot 4, value 23 """
    return Schedule.from_placement(table1, {1: [1, 2, 3], 7: [4]})


@pytest.fixture
def table1_from_file(table1_file) -> Instance:
    return load_instance(table1_file)


@st.composite
def tiny_instances(draw, max_ads: int = 6, max_slots: int = 4, max_capacity: int = 6, rdwv: bool = True):
    """ Instances small enough for the exhaustive oracle """
    slot_count = draw(st.integers(1, max_slots))
    capacity = draw(st.integers(1, max_capacity))
    n = draw(st.integers(0, max_ads))
    kind = ProblemKind.rdwv if rdwv and draw(st.booleans()) else ProblemKind.maxspace

    ads = []
    for ad_id in range(1, n + 1):
        size = draw(st.integers(1, capacity + 1))
        if kind == ProblemKind.maxspace:
            ads.append(Ad.plain(ad_id, size, draw(st.integers(1, slot_count)), slot_count))
            continue
        release = draw(st.integers(1, slot_count))
        deadline = draw(st.integers(release, slot_count))
        window = deadline - release + 1
        freq_min = draw(st.integers(1, window))
        freq_max = draw(st.integers(freq_min, window + 1))
        ads.append(Ad(
            id=ad_id, size=size, value=draw(st.integers(1, 10)), freq_min=freq_min, freq_max=freq_max,
            release=release, deadline=deadline
        ))
    return Instance(kind=kind, slot_count=slot_count, capacity=capacity, ads=ads)
