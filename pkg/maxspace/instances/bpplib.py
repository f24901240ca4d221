""" Conversion of BPPLIB cutting-stock (CSP) and bin-packing (BPP) files """
import enum
import math
from pathlib import Path

from maxspace.misc import InvalidInstanceError
from maxspace.model import Ad, Instance, ProblemKind
from maxspace.out import warning_console
from .codec import _content_lines, _ints


class BppClass(str, enum.Enum):
    falkenauer_triples = "falkenauer-triples"
    other = "other"


def from_bpplib(text: str, class_hint: BppClass = BppClass.other, *, quiet: bool = False) -> Instance:
    """ MAXSPACE instance built from a CSP file

    Items map to ads with ``s = length`` and ``w = min(demand, K)``; the bin
    capacity becomes L. K is ``ceil(sum(d) / 3)`` for Falkenauer triples and
    ``ceil(sum(h * d) / L)`` otherwise. Lines holding only a length have
    demand 1.
    """
    lines = _content_lines(text)
    if len(lines) < 2:
        raise InvalidInstanceError("expected an item count line and a capacity line", line=len(lines) + 1)

    (count_line, count_tokens), (cap_line, cap_tokens) = lines[0], lines[1]
    if len(count_tokens) != 1:
        raise InvalidInstanceError("first line must hold the item count", line=count_line)
    if len(cap_tokens) != 1:
        raise InvalidInstanceError("second line must hold the bin capacity", line=cap_line)
    count = _ints(count_tokens, count_line)[0]
    capacity = _ints(cap_tokens, cap_line)[0]
    if capacity < 1:
        raise InvalidInstanceError("bin capacity must be positive", line=cap_line)

    items = lines[2:]
    if len(items) != count:
        raise InvalidInstanceError(f"announced {count} items, found {len(items)}",
                                   line=items[-1][0] if items else cap_line)

    pairs = []
    for number, tokens in items:
        if len(tokens) not in (1, 2):
            raise InvalidInstanceError("item lines are 'length [demand]'", line=number)
        values = _ints(tokens, number)
        length, demand = values[0], (values[1] if len(values) == 2 else 1)
        if length < 1 or demand < 1:
            raise InvalidInstanceError("length and demand must be positive", line=number)
        pairs.append((length, demand))

    if not pairs:
        raise InvalidInstanceError("no items", line=cap_line)
    total_demand = sum(d for _, d in pairs)
    if class_hint == BppClass.falkenauer_triples:
        slot_count = math.ceil(total_demand / 3)
    else:
        slot_count = math.ceil(sum(h * d for h, d in pairs) / capacity)
    slot_count = max(slot_count, 1)

    ads = []
    for ad_id, (length, demand) in enumerate(pairs, start=1):
        if demand > slot_count and not quiet:
            warning_console.log(f"item {ad_id}: demand {demand} exceeds K={slot_count}, frequency capped to K")
        ads.append(Ad.plain(ad_id, length, min(demand, slot_count), slot_count))
    return Instance(kind=ProblemKind.maxspace, slot_count=slot_count, capacity=capacity, ads=ads)


def load_bpplib(location: Path, class_hint: BppClass = BppClass.other, *, quiet: bool = False) -> Instance:
    return from_bpplib(Path(location).read_text(encoding="utf-8"), class_hint, quiet=quiet)
