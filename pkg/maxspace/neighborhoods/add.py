from typing import Iterator, Optional, Tuple

from maxspace.fenwick import can_place
from maxspace.misc import Deadline
from maxspace.model import Schedule
from ._model import Add, Neighborhood, expired, slack_change


class AddNeighborhood(Neighborhood):
    """ ADD: insert an unscheduled ad with first-fit """
    _name = "add"

    def enumerate(self, s: Schedule, deadline: Optional[Deadline] = None) -> Iterator[Add]:
        tree = s.tree
        capacity = s.capacity
        for ad_id in s.unscheduled_ads():
            if expired(deadline):
                return
            size = s.sizes[ad_id]
            if size > capacity:
                continue
            r, d = s.release[ad_id], s.deadline[ad_id]
            if not can_place(tree, s.freq_min[ad_id], size, r, d):
                continue
            # the least full slot of the window must take at least one copy
            if tree.range_min_load(r, d) + size > capacity:
                continue
            slots = s.first_fit_slots(ad_id)
            if slots is not None:
                yield Add(ad_id, tuple(slots))

    def delta(self, s: Schedule, m: Add) -> Tuple[int, int]:
        size = s.sizes[m.ad]
        return s.values[m.ad] * len(m.slots), slack_change(s, {j: size for j in m.slots})
