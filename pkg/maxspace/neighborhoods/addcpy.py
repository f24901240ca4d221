from typing import Iterator, Optional, Tuple

from maxspace.misc import Deadline
from maxspace.model import Schedule
from ._model import AddCpy, Neighborhood, expired


class AddCopyNeighborhood(Neighborhood):
    """ ADDCPY: one more copy of a scheduled ad below its freq_max

    Empty on MAXSPACE-shaped instances since freq_min = freq_max there.
    """
    _name = "addcpy"

    def enumerate(self, s: Schedule, deadline: Optional[Deadline] = None) -> Iterator[AddCpy]:
        tree = s.tree
        capacity = s.capacity
        loads = s.loads
        slot_ads = s.slot_ads
        for ad_id in s.scheduled_ads():
            if expired(deadline):
                return
            copies = len(s.placement[ad_id])
            if copies >= s.freq_max[ad_id]:
                continue
            size = s.sizes[ad_id]
            r, d = s.release[ad_id], s.deadline[ad_id]
            if tree.range_min_load(r, d) + size > capacity:
                continue
            for j in range(r, d + 1):
                if ad_id not in slot_ads[j] and loads[j] + size <= capacity:
                    yield AddCpy(ad_id, copies + 1, j)

    def delta(self, s: Schedule, m: AddCpy) -> Tuple[int, int]:
        size = s.sizes[m.ad]
        slack = s.capacity - s.loads[m.slot_j]
        return s.values[m.ad], (slack - size) ** 2 - slack * slack
