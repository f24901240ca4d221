import json
import time
from pathlib import Path
from typing import Dict, List, Union, Optional, Protocol, Sequence, Tuple

from Crypto.Hash import MD5  # noqa: the package name is not the same

try:
    import yaml
except ImportError:
    yaml = None


class ContextualItem(Protocol):
    """ Item providing context to exceptions """

    def print(self):
        """ protocol function allowing to print context """
        pass


class ContextualException(Exception):
    """ Custom exception providing a context """

    def __init__(self, msg: str, ctx: Optional[ContextualItem] = None):
        self._context: ContextualItem = ctx
        super().__init__(msg)

    def print_context(self):
        """ Prints the current context """
        if self._context:
            self._context.print()


class InvalidInstanceError(ContextualException):
    """ Instance, solution or BPPLIB text that cannot be loaded """

    def __init__(self, msg: str, line: Optional[int] = None, ctx: Optional[ContextualItem] = None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg, ctx)


class SearchSpaceTooLarge(ContextualException):
    """ The exhaustive oracle refuses instances above its configuration bound """

    def __init__(self, bound: int, limit: int):
        self.bound = bound
        self.limit = limit
        super().__init__(f"search space bound {bound} exceeds limit {limit}")


class InfeasibleMoveError(ContextualException):
    pass


class InvalidConfigError(ContextualException):
    pass


class InfeasibleScheduleError(ContextualException):
    """ A solver returned a schedule that fails the feasibility check """
    pass


class IncompleteGridError(ContextualException):
    """ A profile or table was requested over a grid with missing cells """

    def __init__(self, missing: Sequence[Tuple[str, str]]):
        self.missing = list(missing)
        listing = ", ".join(f"({inst}, {algo})" for inst, algo in self.missing[:10])
        if len(self.missing) > 10:
            listing += f", ... ({len(self.missing) - 10} more)"
        super().__init__(f"grid has {len(self.missing)} missing cells: {listing}")


class Deadline:
    """ Wall-clock budget checked between move applications

    A limit of None means unbounded.
    """

    def __init__(self, seconds: Optional[float]):
        self.seconds = seconds
        self.start = time.monotonic()
        self._end = None if seconds is None else self.start + seconds

    @property
    def expired(self) -> bool:
        if self._end is None:
            return False
        return time.monotonic() >= self._end

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.start


def load_obj(location: Path) -> Union[Dict, List]:
    """ Loads an object from standard formats (.json, yaml, ...) to a standard structure (Dict, List)"""
    with location.open() as fp:
        if location.suffix == '.json':
            return json.load(fp)
        elif yaml and location.suffix in ('.yaml', '.yml'):
            return yaml.load(fp, Loader=yaml.FullLoader)
        else:
            raise ValueError('File of unknown format !!')


def md5sum(file_path: Path, chunk_size: int = 8192):
    """ Return a md5 hash of a files content """
    h = MD5.new()

    with file_path.open('rb') as f:
        while True:
            chunk = f.read(chunk_size)
            if len(chunk):
                h.update(chunk)
            else:
                break
    return h.hexdigest()


def md5_text(text: str) -> str:
    """ Return a md5 hash of a utf-8 string """
    h = MD5.new()
    h.update(text.encode("utf-8"))
    return h.hexdigest()
