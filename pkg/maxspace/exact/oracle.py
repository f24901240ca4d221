""" Exhaustive oracle for tiny instances """
import itertools
import math
from typing import List, Optional, Sequence, Tuple

import joblib

from maxspace.misc import SearchSpaceTooLarge
from maxspace.model import Ad, Instance, Schedule

SEARCH_LIMIT = 10 ** 8

Choice = Tuple[int, ...]


def _ad_configurations(ad: Ad) -> int:
    window = ad.window
    return 1 + sum(math.comb(window, c) for c in range(ad.freq_min, min(ad.freq_max, window) + 1))


def search_space_size(instance: Instance, cap: Optional[int] = None) -> int:
    """ Product over ads of (1 + number of admissible slot subsets of the window)

    With ``cap`` the product stops growing once it passes the cap.
    """
    bound = 1
    for ad in instance.ads:
        bound *= _ad_configurations(ad)
        if cap is not None and bound > cap:
            return bound
    return bound


def ad_choices(ad: Ad, capacity: int) -> List[Choice]:
    """ Placements of one ad in enumeration order: none, then by copy count, then lexicographic slots """
    choices: List[Choice] = [()]
    if ad.size > capacity:
        return choices
    window = range(ad.release, ad.deadline + 1)
    for count in range(ad.freq_min, min(ad.freq_max, ad.window) + 1):
        choices.extend(itertools.combinations(window, count))
    return choices


class _Search:
    """ Depth-first enumeration with capacity and optimistic-bound pruning """

    def __init__(self, instance: Instance):
        self.capacity = instance.capacity
        self.sizes = [ad.size for ad in instance.ads]
        self.values = [ad.value for ad in instance.ads]
        self.choices = [ad_choices(ad, instance.capacity) for ad in instance.ads]
        n = instance.n

        # best value still reachable by ads i.. regardless of space
        self.suffix_value = [0] * (n + 1)
        # (value, size) of the best value-per-size ratio among ads i..
        self.suffix_ratio: List[Tuple[int, int]] = [(0, 1)] * (n + 1)
        for i in range(n - 1, -1, -1):
            ad = instance.ads[i]
            reach = 0
            ratio = self.suffix_ratio[i + 1]
            if ad.size <= instance.capacity:
                reach = ad.value * min(ad.freq_max, ad.window)
                if ad.value * ratio[1] > ratio[0] * ad.size:
                    ratio = (ad.value, ad.size)
            self.suffix_value[i] = self.suffix_value[i + 1] + reach
            self.suffix_ratio[i] = ratio

        self.loads = [0] * (instance.slot_count + 1)
        self.free = instance.slot_count * instance.capacity
        self.picks: List[Choice] = [()] * n
        self.best_value = -1
        self.best_picks: List[Choice] = []

    def _optimistic(self, i: int) -> int:
        ratio_value, ratio_size = self.suffix_ratio[i]
        return min(self.suffix_value[i], (self.free * ratio_value) // ratio_size)

    def run(self, i: int, value: int):
        if i == len(self.choices):
            if value > self.best_value:
                self.best_value = value
                self.best_picks = list(self.picks)
            return
        if value + self._optimistic(i) <= self.best_value:
            return
        size = self.sizes[i]
        per_copy = self.values[i]
        room = self.capacity - size
        loads = self.loads
        for choice in self.choices[i]:
            if any(loads[j] > room for j in choice):
                continue
            for j in choice:
                loads[j] += size
            self.free -= size * len(choice)
            self.picks[i] = choice
            self.run(i + 1, value + per_copy * len(choice))
            for j in choice:
                loads[j] -= size
            self.free += size * len(choice)
        self.picks[i] = ()


def _branch(instance: Instance, first: Choice) -> Tuple[int, List[Choice]]:
    search = _Search(instance)
    size = search.sizes[0]
    for j in first:
        search.loads[j] += size
    search.free -= size * len(first)
    search.picks[0] = first
    search.run(1, search.values[0] * len(first))
    return search.best_value, search.best_picks


def _as_schedule(instance: Instance, picks: Sequence[Choice]) -> Schedule:
    return Schedule.from_placement(instance, {i + 1: list(choice) for i, choice in enumerate(picks) if choice})


def brute_force(instance: Instance, *, limit: int = SEARCH_LIMIT, n_jobs: int = 1) -> Tuple[int, Schedule]:
    """ Exact optimum of the primary value and the first optimal schedule in enumeration order

    Ads are enumerated by id; each ad goes through no placement, then copy
    counts freq_min..freq_max, then window slot subsets in lexicographic
    order. With ``n_jobs`` > 1 the branches of the first ad run in parallel and
    are reduced by (value, lowest branch), which gives the serial answer.
    """
    bound = search_space_size(instance, cap=limit)
    if bound > limit:
        raise SearchSpaceTooLarge(bound, limit)
    if instance.n == 0:
        return 0, Schedule(instance)

    if n_jobs == 1:
        search = _Search(instance)
        search.run(0, 0)
        return search.best_value, _as_schedule(instance, search.best_picks)

    branches = ad_choices(instance.ads[0], instance.capacity)
    results = joblib.Parallel(n_jobs=n_jobs)(joblib.delayed(_branch)(instance, first) for first in branches)
    best_value, best_picks = -1, []
    for value, picks in results:
        if value > best_value:
            best_value, best_picks = value, picks
    return best_value, _as_schedule(instance, best_picks)
