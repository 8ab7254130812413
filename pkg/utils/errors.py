from typing import Optional


class DiagramError(ValueError):
    """Malformed MLD input or an event list that is not a string link."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StrandMismatchError(ValueError):
    pass


class IndexRangeError(ValueError):
    pass


class CrossingSelectionError(ValueError):
    pass


class DisconnectedProjectionError(ValueError):
    pass


class StructuralError(RuntimeError):
    """Internal consistency failure: enumeration, forest or presentation checks."""


class CheckFailure(AssertionError):
    def __init__(self, message: str, item: Optional[str] = None):
        self.item = item
        super().__init__(message if item is None else f"{message} [{item}]")
