"""Exception hierarchy shared by every module."""


class HallGameError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HallGameError, ValueError):
    """The caller supplied an invalid instance or argument."""


class ParseError(InputError):
    """A text file could not be parsed.

    ``line`` is the 1-based line number, or ``None`` for whole-file problems.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeBoundError(HallGameError):
    """An exhaustive procedure refused an instance above its size bound."""


class InternalInvariantError(HallGameError, AssertionError):
    """A proved invariant failed at runtime; always an implementation bug."""
