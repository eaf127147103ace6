"""Exception hierarchy shared across the package."""


class GsvError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GsvError, ValueError):
    """An argument violates an operation's preconditions."""


class LoopEdgeError(DomainError):
    """Attempt to create an edge from a vertex to itself."""


class GraphIdError(DomainError):
    """A graph-ID string cannot be parsed."""


class ComputationRefusedError(GsvError):
    """A computation was refused because the problem size exceeds a limit."""

    def __init__(self, message: str, *, size: int, limit: int):
        super().__init__(message)
        self.size = size
        self.limit = limit


class AutoLimitExceeded(ComputationRefusedError):
    """Component is above the automatic-computation limit; a force flag is required."""


class HardCapExceeded(ComputationRefusedError):
    """Component is above the hard enumeration cap; cannot be forced."""


class CacheIntegrityError(GsvError):
    """A cache write would silently replace a conflicting stored result."""


class CacheIOError(GsvError):
    """The cache store is unavailable; the operation may succeed on retry."""
