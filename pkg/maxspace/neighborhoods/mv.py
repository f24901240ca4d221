from typing import ClassVar, Iterator, Optional, Tuple

from maxspace.misc import Deadline
from maxspace.model import Schedule
from ._model import Mv, Neighborhood, expired


class MoveNeighborhood(Neighborhood):
    """ MV: move one copy to another slot of its window """
    _name = "mv"
    changes_value: ClassVar[bool] = False

    def enumerate(self, s: Schedule, deadline: Optional[Deadline] = None) -> Iterator[Mv]:
        tree = s.tree
        capacity = s.capacity
        loads = s.loads
        slot_ads = s.slot_ads
        for ad_id in s.scheduled_ads():
            if expired(deadline):
                return
            size = s.sizes[ad_id]
            r, d = s.release[ad_id], s.deadline[ad_id]
            # no slot of the window can take the copy
            if tree.range_min_load(r, d) + size > capacity:
                continue
            for copy_l, p in enumerate(s.placement[ad_id], start=1):
                for j in range(r, d + 1):
                    if j != p and ad_id not in slot_ads[j] and loads[j] + size <= capacity:
                        yield Mv(ad_id, copy_l, j)

    def delta(self, s: Schedule, m: Mv) -> Tuple[int, int]:
        size = s.sizes[m.ad]
        p = s.placement[m.ad][m.copy_l - 1]
        slack_p = s.capacity - s.loads[p]
        slack_j = s.capacity - s.loads[m.slot_j]
        return 0, 2 * size * (slack_p - slack_j) + 2 * size * size
