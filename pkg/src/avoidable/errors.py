"""Exception types shared across the package."""


class GraphError(ValueError):
    """A graph or argument violates an operation's precondition."""


class ParseError(GraphError):
    """Malformed graph input. ``offset`` is the byte (or line) position of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class NotConnectedError(GraphError):
    """The operation requires a connected graph."""


class BoundExceededError(GraphError):
    """An exhaustive routine was asked to run above its configured size bound."""


class NoBisimplicialOrderingError(GraphError):
    """The graph has no bisimplicial elimination ordering; use the brute-force solver."""
