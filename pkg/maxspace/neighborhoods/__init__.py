from ._model import (
    Add, Chg, Rpck, AddCpy, Mv, Move, Phase, ScoredMove, Neighborhood, slack_change
)
from .misc import NeighborhoodList, neighborhood_order, enumerate_moves, score, gain
