"""Exception hierarchy shared by all modules."""


class YoungBraidError(Exception):
    pass


class RankError(YoungBraidError, ValueError):
    """A generator index, rank or strand count does not fit its ambient group."""


class ParseError(YoungBraidError, ValueError):
    """Malformed text input; carries the offending position for caret display."""

    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        self.message = message
        super().__init__(f"{message} at column {pos + 1}")

    def annotated(self) -> str:
        return f"{self.message}\n  {self.text}\n  {' ' * self.pos}^"


class NotAMemberError(YoungBraidError):
    """The braid does not stabilize the canonical tuple of the partition."""


class NotInOrbitError(YoungBraidError):
    """The tuple is not in the braid group orbit of the base tuple."""


class DecompositionError(YoungBraidError):
    """The factorization loop exceeded its safety cap (an implementation bug)."""


class WordLengthExceeded(YoungBraidError):
    """A tuple grew past the caller's length budget during a braid action."""
