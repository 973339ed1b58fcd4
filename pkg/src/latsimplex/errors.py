"""Exception hierarchy shared by all modules."""


class LatSimplexError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LatSimplexError, ValueError):
    """An argument lies outside the domain of the operation."""


class DimensionError(LatSimplexError, ValueError):
    """Matrix or vector shapes do not fit together."""


class SingularMatrixError(LatSimplexError, ArithmeticError):
    pass


class DegenerateError(LatSimplexError, ValueError):
    pass


class EmptyInteriorError(LatSimplexError, ValueError):
    """The simplex contains no interior lattice point."""


class PreconditionError(LatSimplexError, ValueError):
    pass


class BudgetError(LatSimplexError, RuntimeError):
    """An exhaustive search would exceed its configured budget."""


class InvariantViolation(LatSimplexError, AssertionError):
    """A proven property failed to hold; this always indicates a bug."""
