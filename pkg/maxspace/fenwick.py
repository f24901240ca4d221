""" Binary indexed trees over the slots of a schedule

SlackTree mirrors the per-slot loads of one schedule and answers in O(log K):

- range sums of free space (L - load), the ADD / CHG necessary test;
- leftmost slot of minimum load and of maximum load over an interval.

Range extrema use a pair of complementary Fenwick trees (one covering
``(i - lowbit(i), i]``, one covering ``[i, i + lowbit(i) - 1]``). Improving
updates walk a single path. Worsening updates repair only the path nodes whose
extremum was the updated slot, each repair re-reading that node's children.
"""
from typing import List, Optional, Sequence, Tuple

Key = Tuple[int, int]


def _lowbit(i: int) -> int:
    return i & -i


class TreeStats:
    """ Operation counters used to check logarithmic costs """
    __slots__ = ("last_query_touches", "query_count", "update_touches", "repairs", "rebuilds")

    def __init__(self):
        self.last_query_touches = 0
        self.query_count = 0
        self.update_touches = 0
        self.repairs = 0
        self.rebuilds = 0

    def copy(self) -> "TreeStats":
        other = TreeStats()
        for name in self.__slots__:
            setattr(other, name, getattr(self, name))
        return other


class _MinPair:
    """ Range-minimum over keys with point updates, smallest key wins """
    __slots__ = ("size", "keys", "left", "right", "stats")

    def __init__(self, size: int, stats: TreeStats):
        self.size = size
        self.stats = stats
        self.keys: List[Optional[Key]] = [None] * (size + 1)
        self.left: List[Optional[Key]] = [None] * (size + 1)
        self.right: List[Optional[Key]] = [None] * (size + 1)

    def build(self, keys: Sequence[Key]):
        """ O(K) construction, keys[0] is ignored """
        size = self.size
        self.keys = list(keys)
        left = list(keys)
        right = list(keys)
        for i in range(1, size + 1):
            parent = i + _lowbit(i)
            if parent <= size and left[i] < left[parent]:
                left[parent] = left[i]
        for i in range(size, 0, -1):
            parent = i - _lowbit(i)
            if parent >= 1 and right[i] < right[parent]:
                right[parent] = right[i]
        self.left = left
        self.right = right

    def copy(self, stats: TreeStats) -> "_MinPair":
        other = _MinPair.__new__(_MinPair)
        other.size = self.size
        other.stats = stats
        other.keys = self.keys[:]
        other.left = self.left[:]
        other.right = self.right[:]
        return other

    def _repair_left(self, i: int) -> Key:
        best = self.keys[i]
        stop = i - _lowbit(i)
        child = i - 1
        touches = 1
        while child > stop:
            if self.left[child] < best:
                best = self.left[child]
            child -= _lowbit(child)
            touches += 1
        self.stats.update_touches += touches
        self.stats.repairs += 1
        return best

    def _repair_right(self, i: int) -> Key:
        best = self.keys[i]
        stop = min(i + _lowbit(i), self.size + 1)
        child = i + 1
        touches = 1
        while child < stop:
            if self.right[child] < best:
                best = self.right[child]
            child += _lowbit(child)
            touches += 1
        self.stats.update_touches += touches
        self.stats.repairs += 1
        return best

    def update(self, j: int, key: Key):
        old = self.keys[j]
        self.keys[j] = key
        if key == old:
            return
        stats = self.stats
        left, right = self.left, self.right
        size = self.size

        if key < old:
            i = j
            while i <= size:
                stats.update_touches += 1
                if left[i] <= key:
                    break
                left[i] = key
                i += _lowbit(i)
            i = j
            while i >= 1:
                stats.update_touches += 1
                if right[i] <= key:
                    break
                right[i] = key
                i -= _lowbit(i)
            return

        # keys are unique (slot index), so a node whose extremum is not `old`
        # is untouched by this update, and so are all its ancestors
        i = j
        while i <= size:
            stats.update_touches += 1
            if left[i] != old:
                break
            left[i] = self._repair_left(i)
            i += _lowbit(i)
        i = j
        while i >= 1:
            stats.update_touches += 1
            if right[i] != old:
                break
            right[i] = self._repair_right(i)
            i -= _lowbit(i)

    def query(self, a: int, b: int) -> Key:
        left, right = self.left, self.right
        best = None
        touches = 0
        i = a
        while i <= b and i + _lowbit(i) - 1 <= b:
            if best is None or right[i] < best:
                best = right[i]
            i += _lowbit(i)
            touches += 1
        j = b
        while j >= i and j - _lowbit(j) + 1 >= i:
            if best is None or left[j] < best:
                best = left[j]
            j -= _lowbit(j)
            touches += 1
        if j >= i:
            # only slot i is left uncovered
            if best is None or self.keys[i] < best:
                best = self.keys[i]
            touches += 1
        self.stats.last_query_touches = touches
        self.stats.query_count += 1
        return best


class SlackTree:
    """ Fenwick trees mirroring the per-slot loads of a schedule

    Slots are 1-based. Loads may exceed the capacity only for schedules built
    unchecked from external data (free space is then negative).
    """

    def __init__(self, slot_count: int, capacity: int, loads: Optional[Sequence[int]] = None):
        assert slot_count >= 1, "a tree needs at least one slot"
        self.size = slot_count
        self.capacity = capacity
        self.stats = TreeStats()
        self._loads: List[int] = [0] * (slot_count + 1)
        self._sums: List[int] = [0] * (slot_count + 1)
        self._min = _MinPair(slot_count, self.stats)
        self._max = _MinPair(slot_count, self.stats)
        self.rebuild(loads)

    def rebuild(self, loads: Optional[Sequence[int]] = None):
        """ O(K) bulk rebuild from 1-based loads (all zero when omitted) """
        size = self.size
        if loads is None:
            loads = [0] * (size + 1)
        assert len(loads) == size + 1, "loads must be indexed 1..K"
        self._loads = [0] + [int(x) for x in loads[1:]]

        sums = [0] + [self.capacity - x for x in self._loads[1:]]
        for i in range(1, size + 1):
            parent = i + _lowbit(i)
            if parent <= size:
                sums[parent] += sums[i]
        self._sums = sums

        self._min.build([(0, 0)] + [(self._loads[j], j) for j in range(1, size + 1)])
        self._max.build([(0, 0)] + [(-self._loads[j], j) for j in range(1, size + 1)])
        self.stats.rebuilds += 1

    def copy(self) -> "SlackTree":
        other = SlackTree.__new__(SlackTree)
        other.size = self.size
        other.capacity = self.capacity
        other.stats = self.stats.copy()
        other._loads = self._loads[:]
        other._sums = self._sums[:]
        other._min = self._min.copy(other.stats)
        other._max = self._max.copy(other.stats)
        return other

    def load(self, j: int) -> int:
        return self._loads[j]

    def point_update(self, j: int, new_load: int):
        """ Set the load of slot j """
        assert 1 <= j <= self.size, f"slot {j} out of range 1..{self.size}"
        assert new_load >= 0, "loads are non-negative"
        old_load = self._loads[j]
        if old_load == new_load:
            return
        self._loads[j] = new_load

        delta = old_load - new_load
        i = j
        while i <= self.size:
            self._sums[i] += delta
            i += _lowbit(i)
            self.stats.update_touches += 1

        self._min.update(j, (new_load, j))
        self._max.update(j, (-new_load, j))

    def _prefix(self, j: int) -> Tuple[int, int]:
        total = 0
        touches = 0
        while j > 0:
            total += self._sums[j]
            j -= _lowbit(j)
            touches += 1
        return total, touches

    def range_sum(self, a: int, b: int) -> int:
        """ Free space summed over slots a..b """
        high, t_high = self._prefix(b)
        low, t_low = self._prefix(a - 1)
        self.stats.last_query_touches = t_high + t_low
        self.stats.query_count += 1
        return high - low

    def min_load_slot(self, a: int, b: int) -> Tuple[int, int]:
        """ Leftmost slot of minimum load in a..b, as (slot, load) """
        load, slot = self._min.query(a, b)
        return slot, load

    def max_load_slot(self, a: int, b: int) -> Tuple[int, int]:
        """ Leftmost slot of maximum load in a..b, as (slot, load) """
        neg_load, slot = self._max.query(a, b)
        return slot, -neg_load

    def range_min_load(self, a: int, b: int) -> int:
        return self.min_load_slot(a, b)[1]

    def range_max_load(self, a: int, b: int) -> int:
        return self.max_load_slot(a, b)[1]


def can_place(tree: SlackTree, t: int, s: int, r: int, d: int) -> bool:
    """ Necessary test for placing t copies of size s in window [r, d]

    Only the total free space is checked; per-slot fit is left to first-fit.
    """
    return tree.range_sum(r, d) >= t * s
