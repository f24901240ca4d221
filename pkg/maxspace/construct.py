""" First-fit placement and the randomized greedy constructive heuristic """
from bisect import bisect_right
from fractions import Fraction
from numbers import Real
from typing import List

import numpy as np

from maxspace.model import Instance, ProblemKind, Schedule
from maxspace.neighborhoods import Add


def first_fit(s: Schedule, ad_id: int) -> bool:
    """ Place an unscheduled ad in the first slots of its window that fit it

    As many copies as possible are placed, up to freq_max. When fewer than
    freq_min fit, nothing changes and the ad is discarded (returns False).
    """
    assert not s.scheduled(ad_id), f"ad {ad_id} is already scheduled"
    slots = s.first_fit_slots(ad_id)
    if slots is None:
        return False
    s.apply(Add(ad_id, tuple(slots)))
    return True


def ad_costs(instance: Instance) -> List[Fraction]:
    """ Static greedy costs, index 0 unused

    s * w for MAXSPACE-shaped instances, v / s otherwise (exact rationals).
    """
    if instance.effective_kind == ProblemKind.maxspace:
        return [Fraction(0)] + [Fraction(ad.size * ad.freq_min) for ad in instance.ads]
    return [Fraction(0)] + [Fraction(ad.value, ad.size) for ad in instance.ads]


def _as_fraction(alpha: Real) -> Fraction:
    # decimal text keeps 0.3 as 3/10 instead of its binary approximation
    return Fraction(str(alpha))


def constructive(instance: Instance, alpha: float, rng: np.random.Generator) -> Schedule:
    """ Randomized greedy construction

    Each round the restricted candidate list holds the remaining ads with cost
    in [max - alpha (max - min), max]; one is drawn uniformly and first-fit
    tries to place it, then it leaves the candidate set. Costs are computed
    once. Candidates are kept sorted by (cost desc, id asc) so the list is a
    prefix and the draw order is reproducible.
    """
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    a = _as_fraction(alpha)
    s = Schedule(instance)
    costs = ad_costs(instance)

    candidates = sorted(range(1, instance.n + 1), key=lambda i: (-costs[i], i))
    neg_costs = [-costs[i] for i in candidates]

    while candidates:
        high, low = -neg_costs[0], -neg_costs[-1]
        threshold = high - a * (high - low)
        rc_size = bisect_right(neg_costs, -threshold)
        pick = int(rng.integers(rc_size))
        ad_id = candidates.pop(pick)
        del neg_costs[pick]
        first_fit(s, ad_id)
    return s
