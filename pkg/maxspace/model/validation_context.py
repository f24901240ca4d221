from typing import Iterator, List, Optional

from maxspace.out import error_console


class ValidationError:
    """ A failed schedule check """

    def __init__(self, msg: str, *, item_name: Optional[str] = None, location: Optional[str] = None, data=None):
        self.msg = msg
        self.item_name = item_name
        self.location = location
        self.data = data

    def __str__(self):
        return f"{self.item_name or '-'} [{self.location or '-'}] >> {self.msg}"


class ValidationContext:
    """ Failed checks in recording order """

    def __init__(self):
        self._errors: List[ValidationError] = []

    def __iter__(self) -> Iterator[ValidationError]:
        return iter(self._errors)

    def __len__(self):
        return len(self._errors)

    def error_assertion(self, expr: bool, *, msg: str, item_name: Optional[str] = None,
                        location: Optional[str] = None, data=None):
        """ Record an error when expr does not hold """
        if not expr:
            self._errors.append(ValidationError(msg, item_name=item_name, location=location, data=data))

    def print(self, limit: int = -1):
        errors = self._errors if limit < 0 else self._errors[:limit]
        for item in errors:
            error_console.print(item)

    def fails(self) -> bool:
        return len(self._errors) != 0

    @property
    def ok(self) -> bool:
        return not self.fails()

    @property
    def first_error(self) -> Optional[ValidationError]:
        return self._errors[0] if self._errors else None
