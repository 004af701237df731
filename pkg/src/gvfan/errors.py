"""Exception types shared across the package."""


class GFanError(Exception):
    """Base class for all errors raised by gvfan."""


class InvalidInput(GFanError, ValueError):
    """Malformed matrix, vector or document."""


class NonSkewSymmetrizable(InvalidInput):
    pass


class BudgetExceeded(GFanError):
    """A search ran out of budget before reaching a verdict."""

    def __init__(self, message, visited=None):
        super().__init__(message)
        self.visited = visited


class InvariantViolation(GFanError):
    """An internal consistency check failed; indicates corrupted input or a bug."""


class RaysDependent(InvariantViolation):
    pass


class ConeStraddlesWall(InvariantViolation):
    pass


class FiniteTypeNoLimit(InvalidInput):
    pass
