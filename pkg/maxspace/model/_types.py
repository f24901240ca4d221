import enum


class ProblemKind(str, enum.Enum):
    """ Problem family of an instance """
    maxspace = "maxspace"
    rdwv = "rdwv"

    @property
    def label(self) -> str:
        if self == ProblemKind.maxspace:
            return "MAXSPACE"
        return "MAXSPACE-RDWV"
