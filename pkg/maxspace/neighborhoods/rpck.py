from typing import ClassVar, Iterator, Optional, Tuple

from maxspace.misc import Deadline
from maxspace.model import Schedule
from ._model import Neighborhood, Rpck, expired


class RepackNeighborhood(Neighborhood):
    """ RPCK: swap the slots of two copies of different ads """
    _name = "rpck"
    changes_value: ClassVar[bool] = False

    def enumerate(self, s: Schedule, deadline: Optional[Deadline] = None) -> Iterator[Rpck]:
        capacity = s.capacity
        loads = s.loads
        slot_ads = s.slot_ads
        scheduled = list(s.scheduled_ads())
        for pos, a in enumerate(scheduled):
            size_a = s.sizes[a]
            r_a, d_a = s.release[a], s.deadline[a]
            for copy_l, p in enumerate(s.placement[a], start=1):
                if expired(deadline):
                    return
                for b in scheduled[pos + 1:]:
                    if b in slot_ads[p] or not s.release[b] <= p <= s.deadline[b]:
                        continue
                    growth = s.sizes[b] - size_a
                    if loads[p] + growth > capacity:
                        continue
                    for copy_u, q in enumerate(s.placement[b], start=1):
                        if q == p or not r_a <= q <= d_a or a in slot_ads[q]:
                            continue
                        if loads[q] - growth > capacity:
                            continue
                        yield Rpck(a, copy_l, b, copy_u)

    def delta(self, s: Schedule, m: Rpck) -> Tuple[int, int]:
        p, q = m.slots(s)
        growth = s.sizes[m.ad_b] - s.sizes[m.ad_a]
        slack_p = s.capacity - s.loads[p]
        slack_q = s.capacity - s.loads[q]
        return 0, 2 * growth * (slack_q - slack_p + growth)
