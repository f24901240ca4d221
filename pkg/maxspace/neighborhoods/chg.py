from bisect import bisect_left, bisect_right
from typing import Iterator, Optional, Tuple

from maxspace.misc import Deadline
from maxspace.model import Schedule
from ._model import Chg, Neighborhood, expired, slack_change

DEADLINE_STRIDE = 64


class ChangeNeighborhood(Neighborhood):
    """ CHG: drop every copy of a scheduled ad and insert an unscheduled one """
    _name = "chg"
    # cap on (out, in) pairs scanned per enumeration, None scans everything
    budget: Optional[int] = None

    def enumerate(self, s: Schedule, deadline: Optional[Deadline] = None) -> Iterator[Chg]:
        tree = s.tree
        capacity = s.capacity
        incoming = [i for i in s.unscheduled_ads() if s.sizes[i] <= capacity]
        if not incoming:
            return
        scanned = 0
        for out in list(s.scheduled_ads()):
            if expired(deadline):
                return
            out_size = s.sizes[out]
            out_slots = s.placement[out]
            for ad_in in incoming:
                if self.budget is not None and scanned >= self.budget:
                    return
                scanned += 1
                if scanned % DEADLINE_STRIDE == 0 and expired(deadline):
                    return
                r, d = s.release[ad_in], s.deadline[ad_in]
                freed = out_size * (bisect_right(out_slots, d) - bisect_left(out_slots, r))
                if tree.range_sum(r, d) + freed < s.freq_min[ad_in] * s.sizes[ad_in]:
                    continue
                slots = s.first_fit_slots(ad_in, removed=out)
                if slots is not None:
                    yield Chg(out, ad_in, tuple(slots))

    def delta(self, s: Schedule, m: Chg) -> Tuple[int, int]:
        value_delta = s.values[m.ad_in] * len(m.slots) - s.values[m.ad_out] * len(s.placement[m.ad_out])
        changes = {j: -s.sizes[m.ad_out] for j in s.placement[m.ad_out]}
        for j in m.slots:
            changes[j] = changes.get(j, 0) + s.sizes[m.ad_in]
        return value_delta, slack_change(s, changes)
