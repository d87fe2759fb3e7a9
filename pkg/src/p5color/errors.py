"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed graph input (bad edge, bad file)."""


class Graph6Error(InputError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UsageError(ValueError):
    """An operation was called with its preconditions violated."""


class OracleBudgetError(RuntimeError):
    """An exact search exceeded its node budget."""

    def __init__(self, what, budget):
        super().__init__(f"{what}: search-node budget of {budget} exceeded")
        self.budget = budget


class PrecisionError(ArithmeticError):
    """Interval arithmetic could not decide a comparison at the requested precision."""


class IntegrityError(RuntimeError):
    """A proven guarantee appears violated; signals a bug, never bad input."""


class GenerationError(ValueError):
    pass
