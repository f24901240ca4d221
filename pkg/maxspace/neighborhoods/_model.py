import abc
import enum
from typing import Callable, ClassVar, Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

from pydantic import BaseModel, root_validator

from maxspace.misc import Deadline
from maxspace.model import Schedule
from maxspace.model.schedule import Op

Signature = Tuple


class Phase(str, enum.Enum):
    """ Direction in which repacking moves drive the squared slack """
    minimize = "minimize"
    maximize = "maximize"

    @property
    def other(self) -> "Phase":
        return Phase.maximize if self == Phase.minimize else Phase.minimize


class Add(NamedTuple):
    """ Insert an unscheduled ad with first-fit, ``slots`` is the first-fit plan """
    ad: int
    slots: Tuple[int, ...]

    @property
    def signature(self) -> Signature:
        return "ADD", self.ad

    def plan(self, s: Schedule) -> List[Op]:
        return [(1, self.ad, j) for j in self.slots]


class Chg(NamedTuple):
    """ Remove every copy of ``ad_out`` then insert ``ad_in`` with first-fit """
    ad_out: int
    ad_in: int
    slots: Tuple[int, ...]

    @property
    def signature(self) -> Signature:
        return "CHG", self.ad_out, self.ad_in

    def plan(self, s: Schedule) -> List[Op]:
        return [(-1, self.ad_out, j) for j in s.placement[self.ad_out]] + [(1, self.ad_in, j) for j in self.slots]


class Rpck(NamedTuple):
    """ Swap the slots of copy ``copy_l`` of ``ad_a`` and copy ``copy_u`` of ``ad_b`` (1-based copies) """
    ad_a: int
    copy_l: int
    ad_b: int
    copy_u: int

    @property
    def signature(self) -> Signature:
        return "RPCK", self.ad_a, self.ad_b

    def slots(self, s: Schedule) -> Tuple[int, int]:
        return s.placement[self.ad_a][self.copy_l - 1], s.placement[self.ad_b][self.copy_u - 1]

    def plan(self, s: Schedule) -> List[Op]:
        p, q = self.slots(s)
        return [(-1, self.ad_a, p), (-1, self.ad_b, q), (1, self.ad_a, q), (1, self.ad_b, p)]


class AddCpy(NamedTuple):
    """ Add copy number ``copy_l`` of a scheduled ad in ``slot_j`` """
    ad: int
    copy_l: int
    slot_j: int

    @property
    def signature(self) -> Signature:
        return "ADDCPY", self.ad

    def plan(self, s: Schedule) -> List[Op]:
        return [(1, self.ad, self.slot_j)]


class Mv(NamedTuple):
    """ Move copy ``copy_l`` of an ad to ``slot_j`` """
    ad: int
    copy_l: int
    slot_j: int

    @property
    def signature(self) -> Signature:
        return "MV", self.ad

    def plan(self, s: Schedule) -> List[Op]:
        p = s.placement[self.ad][self.copy_l - 1]
        return [(-1, self.ad, p), (1, self.ad, self.slot_j)]


Move = Union[Add, Chg, Rpck, AddCpy, Mv]


class ScoredMove(NamedTuple):
    move: Move
    score: int
    value_delta: int
    slack_delta: int


# (move, value delta) -> allowed
Admissible = Callable[[Move, int], bool]


def expired(deadline: Optional[Deadline]) -> bool:
    return deadline is not None and deadline.expired


def slack_change(s: Schedule, changes: Dict[int, int]) -> int:
    """ Change of the squared slack when slot loads move by ``changes`` """
    capacity = s.capacity
    total = 0
    for j, delta in changes.items():
        slack = capacity - s.loads[j]
        total += (slack - delta) ** 2 - slack * slack
    return total


class Neighborhood(BaseModel, abc.ABC):
    """ Abstract move generator """
    _name: ClassVar[str] = ...
    # ADD, CHG and ADDCPY score by primary value in both phases
    changes_value: ClassVar[bool] = True

    @property
    def name(self) -> str:
        return getattr(self, '_name')

    @root_validator(pre=True)
    def base_validation(cls, values):
        assert hasattr(cls, "_name"), f"A neighborhood requires a name (add a _name attribute to the subclass {cls})"
        return values

    @abc.abstractmethod
    def enumerate(self, s: Schedule, deadline: Optional[Deadline] = None) -> Iterator[Move]:
        """ Feasible moves, ascending ad id then copy index then slot

        An expired ``deadline`` ends the enumeration early.
        """
        pass

    @abc.abstractmethod
    def delta(self, s: Schedule, m: Move) -> Tuple[int, int]:
        """ Exact (primary value, squared slack) change of applying m """
        pass

    def score(self, s: Schedule, m: Move, phase: Phase) -> int:
        """ Larger is better under the phase """
        value_delta, slack_delta = self.delta(s, m)
        return self._score(value_delta, slack_delta, phase)

    def _score(self, value_delta: int, slack_delta: int, phase: Phase) -> int:
        if self.changes_value:
            return value_delta
        if phase == Phase.minimize:
            return -slack_delta
        return slack_delta

    def gain(self, s: Schedule, m: Move, phase: Phase) -> Tuple[int, int]:
        """ Lexicographic (primary, phase objective) gain """
        value_delta, slack_delta = self.delta(s, m)
        if self.changes_value:
            return value_delta, 0
        return 0, self._score(value_delta, slack_delta, phase)

    def best_move(self, s: Schedule, phase: Phase, admissible: Optional[Admissible] = None,
                  deadline: Optional[Deadline] = None) -> Optional[ScoredMove]:
        """ Highest scoring admissible move, earliest in enumeration order on ties

        When ``deadline`` expires mid-scan the best move seen so far is returned.
        """
        best: Optional[ScoredMove] = None
        for m in self.enumerate(s, deadline):
            value_delta, slack_delta = self.delta(s, m)
            if admissible is not None and not admissible(m, value_delta):
                continue
            current = self._score(value_delta, slack_delta, phase)
            if best is None or current > best.score:
                best = ScoredMove(m, current, value_delta, slack_delta)
        return best
