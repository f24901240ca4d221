from bisect import insort
from typing import Iterable, Iterator, List, Mapping, NamedTuple, Optional, Protocol, Set, Tuple

from maxspace.fenwick import SlackTree
from maxspace.misc import InfeasibleMoveError
from .ads import Instance

# (+1 placed | -1 removed, ad id, slot)
Op = Tuple[int, int, int]


class PlannedMove(Protocol):
    """ Anything that can expand itself into primitive placement operations """

    def plan(self, schedule: "Schedule") -> List[Op]:
        pass


class DeltaRecord(NamedTuple):
    """ Applied primitive operations and objective changes, enough to revert exactly """
    move: PlannedMove
    ops: Tuple[Op, ...]
    value_delta: int
    slack_delta: int


class Schedule:
    """ Assignment of ad copies to slots

    Placement is kept twice: per ad as a sorted list of slots, per slot as a set
    of ad ids. Slot loads, primary value and squared slack are cached and only
    change through ``apply`` / ``revert`` (or the unchecked ``from_placement``).
    Slots and ad ids are 1-based.
    """

    def __init__(self, instance: Instance):
        self.instance = instance
        self.slot_count = instance.slot_count
        self.capacity = instance.capacity
        ads = instance.ads
        self.sizes = [0] + [ad.size for ad in ads]
        self.values = [0] + [ad.value for ad in ads]
        self.freq_min = [0] + [ad.freq_min for ad in ads]
        self.freq_max = [0] + [ad.freq_max for ad in ads]
        self.release = [0] + [ad.release for ad in ads]
        self.deadline = [0] + [ad.deadline for ad in ads]

        self.placement: List[List[int]] = [[] for _ in range(instance.n + 1)]
        self.slot_ads: List[Set[int]] = [set() for _ in range(self.slot_count + 1)]
        self.loads: List[int] = [0] * (self.slot_count + 1)
        self.tree = SlackTree(self.slot_count, self.capacity)
        self._value = 0
        self._slack_sq = self.slot_count * self.capacity * self.capacity

    @classmethod
    def from_placement(cls, instance: Instance, placement: Mapping[int, Iterable[int]]) -> "Schedule":
        """ Build a schedule from external data without enforcing feasibility """
        schedule = cls(instance)
        for ad_id, slots in placement.items():
            assert 1 <= ad_id <= instance.n, f"unknown ad {ad_id}"
            slots = sorted(slots)
            for j in slots:
                assert 1 <= j <= instance.slot_count, f"slot {j} out of range"
                schedule.slot_ads[j].add(ad_id)
            schedule.placement[ad_id] = slots
        schedule._refresh()
        return schedule

    def _refresh(self):
        """ Recompute every cache from the placement views """
        sizes = self.sizes
        for j in range(1, self.slot_count + 1):
            self.loads[j] = sum(sizes[i] for i in self.slot_ads[j])
        self.tree.rebuild(self.loads)
        self._value = sum(self.values[i] * len(p) for i, p in enumerate(self.placement))
        self._slack_sq = sum((self.capacity - x) ** 2 for x in self.loads[1:])

    def copy(self) -> "Schedule":
        other = Schedule.__new__(Schedule)
        other.__dict__.update(self.__dict__)
        other.placement = [p[:] for p in self.placement]
        other.slot_ads = [set(a) for a in self.slot_ads]
        other.loads = self.loads[:]
        other.tree = self.tree.copy()
        return other

    @property
    def value(self) -> int:
        """ cached primary value """
        return self._value

    @property
    def slack(self) -> int:
        """ cached squared slack """
        return self._slack_sq

    @property
    def n(self) -> int:
        return len(self.placement) - 1

    def scheduled(self, ad_id: int) -> bool:
        return len(self.placement[ad_id]) > 0

    def scheduled_ads(self) -> Iterator[int]:
        return (i for i in range(1, len(self.placement)) if self.placement[i])

    def unscheduled_ads(self) -> Iterator[int]:
        return (i for i in range(1, len(self.placement)) if not self.placement[i])

    def state(self) -> Tuple:
        """ Comparable snapshot of placements, loads and objectives """
        return (
            tuple(tuple(p) for p in self.placement),
            tuple(tuple(sorted(a)) for a in self.slot_ads),
            tuple(self.loads), self._value, self._slack_sq
        )

    def slots_view(self) -> List[List[int]]:
        """ Sorted ad ids per slot, index 0 unused """
        return [sorted(a) for a in self.slot_ads]

    def first_fit_slots(self, ad_id: int, removed: Optional[int] = None) -> Optional[List[int]]:
        """ Slots first-fit would use for an unscheduled ad, or None if fewer than freq_min fit

        ``removed`` simulates the prior removal of all copies of that ad.
        """
        size = self.sizes[ad_id]
        room = self.capacity - size
        if room < 0:
            return None
        loads = self.loads
        slot_ads = self.slot_ads
        freed = 0
        freed_slots = ()
        if removed is not None:
            freed = self.sizes[removed]
            freed_slots = self.placement[removed]
        wanted = self.freq_max[ad_id]

        chosen = []
        for j in range(self.release[ad_id], self.deadline[ad_id] + 1):
            load = loads[j]
            if freed and j in freed_slots:
                load -= freed
            if load <= room and ad_id not in slot_ads[j]:
                chosen.append(j)
                if len(chosen) == wanted:
                    break
        if len(chosen) < self.freq_min[ad_id]:
            return None
        return chosen

    def _place(self, ad_id: int, j: int):
        size = self.sizes[ad_id]
        slack = self.capacity - self.loads[j]
        insort(self.placement[ad_id], j)
        self.slot_ads[j].add(ad_id)
        self.loads[j] += size
        self.tree.point_update(j, self.loads[j])
        self._value += self.values[ad_id]
        self._slack_sq += (slack - size) ** 2 - slack * slack

    def _remove(self, ad_id: int, j: int):
        size = self.sizes[ad_id]
        slack = self.capacity - self.loads[j]
        self.placement[ad_id].remove(j)
        self.slot_ads[j].discard(ad_id)
        self.loads[j] -= size
        self.tree.point_update(j, self.loads[j])
        self._value -= self.values[ad_id]
        self._slack_sq += (slack + size) ** 2 - slack * slack

    def _check_place(self, ad_id: int, j: int):
        if not self.release[ad_id] <= j <= self.deadline[ad_id]:
            raise InfeasibleMoveError(f"slot {j} is outside the window of ad {ad_id}")
        if ad_id in self.slot_ads[j]:
            raise InfeasibleMoveError(f"ad {ad_id} already has a copy in slot {j}")
        if self.loads[j] + self.sizes[ad_id] > self.capacity:
            raise InfeasibleMoveError(f"ad {ad_id} overflows slot {j}")

    def _undo(self, ops: Iterable[Op]):
        for sign, ad_id, j in reversed(list(ops)):
            if sign > 0:
                self._remove(ad_id, j)
            else:
                self._place(ad_id, j)

    def apply(self, move: PlannedMove) -> DeltaRecord:
        """ Apply a move, rejecting it (schedule untouched) if it breaks feasibility """
        ops = move.plan(self)
        value_before, slack_before = self._value, self._slack_sq
        done: List[Op] = []
        try:
            for sign, ad_id, j in ops:
                if sign > 0:
                    self._check_place(ad_id, j)
                    self._place(ad_id, j)
                else:
                    if ad_id not in self.slot_ads[j]:
                        raise InfeasibleMoveError(f"ad {ad_id} has no copy in slot {j}")
                    self._remove(ad_id, j)
                done.append((sign, ad_id, j))
            for ad_id in {op[1] for op in ops}:
                count = len(self.placement[ad_id])
                if count and not self.freq_min[ad_id] <= count <= self.freq_max[ad_id]:
                    raise InfeasibleMoveError(
                        f"ad {ad_id} would hold {count} copies, outside "
                        f"[{self.freq_min[ad_id]}, {self.freq_max[ad_id]}]"
                    )
        except InfeasibleMoveError:
            self._undo(done)
            raise
        return DeltaRecord(move, tuple(done), self._value - value_before, self._slack_sq - slack_before)

    def revert(self, record: DeltaRecord):
        """ Undo an applied move """
        self._undo(record.ops)


def recomputed_loads(s: Schedule) -> List[int]:
    """ Slot loads rebuilt from the per-ad placement """
    loads = [0] * (s.slot_count + 1)
    for ad_id in range(1, s.n + 1):
        for j in set(s.placement[ad_id]):
            loads[j] += s.sizes[ad_id]
    return loads


def primary_value(s: Schedule) -> int:
    """ Total value of placed copies, recomputed from scratch """
    return sum(s.values[i] * len(s.placement[i]) for i in range(1, s.n + 1))


def squared_slack(s: Schedule) -> int:
    """ Sum over slots of the squared free space, recomputed from scratch """
    return sum((s.capacity - load) ** 2 for load in recomputed_loads(s)[1:])
