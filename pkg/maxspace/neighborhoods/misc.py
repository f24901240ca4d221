import enum
from typing import Iterator, List, Type

from maxspace.model import Instance, ProblemKind, Schedule
from . import add, addcpy, chg, mv, rpck
from ._model import Add, AddCpy, Chg, Move, Mv, Neighborhood, Phase, Rpck


class NeighborhoodList(str, enum.Enum):
    """ Registry of move generators """

    def __new__(cls, neighborhood: Type[Neighborhood], move_cls: type):
        """ Allow setting parameters on enum """
        label = neighborhood._name  # noqa: allow private access
        obj = str.__new__(cls, label)
        obj._value_ = label
        obj._neighborhood = neighborhood
        obj._move_cls = move_cls
        return obj

    mv = mv.MoveNeighborhood, Mv
    rpck = rpck.RepackNeighborhood, Rpck
    addcpy = addcpy.AddCopyNeighborhood, AddCpy
    add = add.AddNeighborhood, Add
    chg = chg.ChangeNeighborhood, Chg

    @property
    def neighborhood(self) -> Type[Neighborhood]:
        return self._neighborhood

    @property
    def move_cls(self) -> type:
        return self._move_cls

    @classmethod
    def of_move(cls, m: Move) -> "NeighborhoodList":
        return next(nb for nb in cls if isinstance(m, nb.move_cls))

    def build(self, **kwargs) -> Neighborhood:
        return self.neighborhood(**kwargs)


MAXSPACE_ORDER = (NeighborhoodList.mv, NeighborhoodList.rpck, NeighborhoodList.add, NeighborhoodList.chg)
RDWV_ORDER = (
    NeighborhoodList.mv, NeighborhoodList.rpck, NeighborhoodList.addcpy,
    NeighborhoodList.add, NeighborhoodList.chg
)


def neighborhood_order(instance: Instance, chg_budget: int = None) -> List[Neighborhood]:
    """ Fixed descent order for the problem family of the instance """
    kinds = MAXSPACE_ORDER if instance.effective_kind == ProblemKind.maxspace else RDWV_ORDER
    return [nb.build(budget=chg_budget) if nb == NeighborhoodList.chg else nb.build() for nb in kinds]


def enumerate_moves(s: Schedule, kind: NeighborhoodList) -> Iterator[Move]:
    return kind.build().enumerate(s)


def score(s: Schedule, m: Move, phase: Phase) -> int:
    return NeighborhoodList.of_move(m).build().score(s, m, phase)


def gain(s: Schedule, m: Move, phase: Phase):
    return NeighborhoodList.of_move(m).build().gain(s, m, phase)
