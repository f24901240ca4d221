""" Canonical text formats for instances and schedules

Instance::

    <kind> <n> <K> <L>
    s v wmin wmax r d        (one line per ad, ids are line order)

MAXSPACE files may use the short form ``s w`` per ad; the canonical writer
emits it for them. Blank lines and ``#`` comments are ignored on read.

Solution::

    slot 1: 1 4
    slot 2:
    ...
    value=<int>
"""
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pydantic

from maxspace.misc import InvalidInstanceError
from maxspace.model import Ad, Instance, ProblemKind, Schedule


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append((number, line.split()))
    return lines


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InvalidInstanceError(f"expected integers, got {' '.join(tokens)!r}", line=number)


def _first_error(e: pydantic.ValidationError) -> str:
    err = e.errors()[0]
    loc = ".".join(str(p) for p in err["loc"] if p != "__root__")
    return f"{loc}: {err['msg']}" if loc else err["msg"]


def read_instance(text: str) -> Instance:
    """ Parse an instance; every structural or invariant violation names its line """
    lines = _content_lines(text)
    if not lines:
        raise InvalidInstanceError("empty instance file", line=1)

    number, header = lines[0]
    if len(header) != 4:
        raise InvalidInstanceError("header must be '<kind> <n> <K> <L>'", line=number)
    try:
        kind = ProblemKind(header[0].lower())
    except ValueError:
        raise InvalidInstanceError(
            f"unknown kind {header[0]!r}, expected one of {[k.value for k in ProblemKind]}", line=number
        )
    n, slot_count, capacity = _ints(header[1:], number)
    if n < 0 or slot_count < 1 or capacity < 1:
        raise InvalidInstanceError("n must be >= 0, K and L must be >= 1", line=number)

    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] + 1 if body else number + 1)
        raise InvalidInstanceError(f"header announces {n} ads, found {len(body)}", line=where)

    ads = []
    for ad_id, (number, tokens) in enumerate(body, start=1):
        values = _ints(tokens, number)
        try:
            if len(values) == 2 and kind == ProblemKind.maxspace:
                ad = Ad.plain(ad_id, values[0], values[1], slot_count)
            elif len(values) == 6:
                s, v, fmin, fmax, r, d = values
                ad = Ad(id=ad_id, size=s, value=v, freq_min=fmin, freq_max=fmax, release=r, deadline=d)
            else:
                expected = "'s w' or 's v wmin wmax r d'" if kind == ProblemKind.maxspace else "'s v wmin wmax r d'"
                raise InvalidInstanceError(f"expected {expected}, got {len(values)} fields", line=number)
        except pydantic.ValidationError as e:
            raise InvalidInstanceError(f"ad {ad_id}: {_first_error(e)}", line=number)
        if ad.deadline > slot_count:
            raise InvalidInstanceError(f"ad {ad_id}: deadline {ad.deadline} exceeds K={slot_count}", line=number)
        if kind == ProblemKind.maxspace and not ad.is_plain(slot_count):
            raise InvalidInstanceError(f"ad {ad_id}: long-form line is not a MAXSPACE ad", line=number)
        ads.append(ad)

    try:
        return Instance(kind=kind, slot_count=slot_count, capacity=capacity, ads=ads)
    except pydantic.ValidationError as e:
        raise InvalidInstanceError(_first_error(e), line=lines[0][0])


def write_instance(instance: Instance) -> str:
    """ Canonical text form (short lines for MAXSPACE) """
    out = [f"{instance.kind.value} {instance.n} {instance.slot_count} {instance.capacity}"]
    for ad in instance.ads:
        if instance.kind == ProblemKind.maxspace:
            out.append(f"{ad.size} {ad.freq_min}")
        else:
            out.append(f"{ad.size} {ad.value} {ad.freq_min} {ad.freq_max} {ad.release} {ad.deadline}")
    return "\n".join(out) + "\n"


def load_instance(location: Path) -> Instance:
    return read_instance(Path(location).read_text(encoding="utf-8"))


def save_instance(instance: Instance, location: Path):
    Path(location).write_text(write_instance(instance), encoding="utf-8")


def write_solution(s: Schedule) -> str:
    out = [
        f"slot {j}: {' '.join(str(i) for i in ads)}".rstrip()
        for j, ads in enumerate(s.slots_view()) if j > 0
    ]
    out.append(f"value={s.value}")
    return "\n".join(out) + "\n"


def read_solution(instance: Instance, text: str) -> Schedule:
    """ Load a schedule; slot and ad references are checked, feasibility is not """
    placement: Dict[int, List[int]] = {}
    declared: Optional[Tuple[int, int]] = None
    for number, tokens in _content_lines(text):
        if tokens[0].startswith("value="):
            declared = (number, _ints([tokens[0][len("value="):]], number)[0])
            continue
        if tokens[0] != "slot" or len(tokens) < 2 or not tokens[1].endswith(":"):
            raise InvalidInstanceError("expected 'slot <j>: <ad ids>' or 'value=<int>'", line=number)
        j = _ints([tokens[1][:-1]], number)[0]
        if not 1 <= j <= instance.slot_count:
            raise InvalidInstanceError(f"slot {j} outside 1..{instance.slot_count}", line=number)
        for ad_id in _ints(tokens[2:], number):
            if not 1 <= ad_id <= instance.n:
                raise InvalidInstanceError(f"unknown ad {ad_id}", line=number)
            slots = placement.setdefault(ad_id, [])
            if j in slots:
                raise InvalidInstanceError(f"ad {ad_id} listed twice in slot {j}", line=number)
            slots.append(j)

    schedule = Schedule.from_placement(instance, placement)
    if declared is not None and declared[1] != schedule.value:
        raise InvalidInstanceError(f"declared value {declared[1]} but placement is worth {schedule.value}",
                                   line=declared[0])
    return schedule
