""" Deterministic descents and the two-phase alternation wrapped around them """
from typing import Callable, List, Optional, Sequence

import numpy as np

from maxspace.misc import Deadline
from maxspace.model import Schedule
from maxspace.neighborhoods import Neighborhood, Phase, neighborhood_order

Descent = Callable[[Schedule, Phase], bool]


def vnd_descent(s: Schedule, order: Sequence[Neighborhood], phase: Phase, deadline: Deadline) -> bool:
    """ Variable neighborhood descent, in place

    Best improvement inside neighborhood k; an improving move sends the search
    back to the first neighborhood, otherwise it moves on to k + 1.
    """
    improved = False
    k = 0
    while k < len(order):
        if deadline.expired:
            break
        best = order[k].best_move(s, phase, deadline=deadline)
        if best is not None and best.score > 0:
            s.apply(best.move)
            improved = True
            k = 0
        else:
            k += 1
    return improved


def best_improvement_descent(s: Schedule, order: Sequence[Neighborhood], phase: Phase, deadline: Deadline) -> bool:
    """ Steepest descent over the union of all neighborhoods, in place

    Moves compare by (primary gain, phase objective gain); ties keep the
    earliest neighborhood in ``order``.
    """
    improved = False
    while not deadline.expired:
        chosen = None
        chosen_gain = (0, 0)
        for nb in order:
            candidate = nb.best_move(s, phase, deadline=deadline)
            if candidate is None:
                continue
            gain = (candidate.score, 0) if nb.changes_value else (0, candidate.score)
            if gain > chosen_gain:
                chosen, chosen_gain = candidate, gain
        if chosen is None:
            break
        s.apply(chosen.move)
        improved = True
    return improved


def two_phase(s: Schedule, descent: Descent, deadline: Deadline) -> Schedule:
    """ Alternate minimize / maximize descents while a full cycle raises the value """
    best = s.value
    while not deadline.expired:
        cycle_improved = False
        for phase in (Phase.minimize, Phase.maximize):
            if deadline.expired:
                return s
            descent(s, phase)
            if s.value > best:
                best = s.value
                cycle_improved = True
        if not cycle_improved:
            break
    return s


def vnd(start: Schedule, rng: Optional[np.random.Generator] = None, *, phase: Optional[Phase] = None,
        deadline: Optional[Deadline] = None, order: Optional[List[Neighborhood]] = None) -> Schedule:
    """ VND from a copy of ``start``

    With ``phase`` the descent runs once under that phase; without it the
    two-phase alternation wraps the descent. The descent is deterministic,
    ``rng`` is accepted for signature parity with the randomized searches.
    """
    deadline = deadline or Deadline(None)
    order = order if order is not None else neighborhood_order(start.instance)
    s = start.copy()
    if phase is not None:
        vnd_descent(s, order, phase, deadline)
        return s
    return two_phase(s, lambda sch, ph: vnd_descent(sch, order, ph, deadline), deadline)


def best_improvement(start: Schedule, *, deadline: Optional[Deadline] = None,
                     order: Optional[List[Neighborhood]] = None) -> Schedule:
    """ Two-phase steepest descent from a copy of ``start`` """
    deadline = deadline or Deadline(None)
    order = order if order is not None else neighborhood_order(start.instance)
    s = start.copy()
    return two_phase(s, lambda sch, ph: best_improvement_descent(sch, order, ph, deadline), deadline)
