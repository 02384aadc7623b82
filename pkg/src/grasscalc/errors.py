"""Exception types shared across the package."""


class DomainError(Exception):
    """Base class for errors a caller can act on (CLI exit code 1)."""


class ShapeError(DomainError):
    """A sequence does not describe a valid partition, context, or class."""


class ContainmentError(DomainError):
    """Skew difference requested for a pair of shapes without containment."""


class DegreeError(DomainError):
    """Degree outside the graded range supported by the context."""


class ContextMismatch(DomainError):
    """Operands live on different Grassmannians."""


class PreconditionError(DomainError):
    """A documented operation precondition does not hold."""


class SearchBudgetExceeded(DomainError):
    """A bounded search ran out of node budget.

    Carries whatever was found before the budget ran out, so partial
    results are not lost.
    """

    def __init__(self, message, partial=None, nodes_visited=0):
        super().__init__(message)
        self.partial = list(partial) if partial is not None else []
        self.nodes_visited = nodes_visited


class InternalError(Exception):
    """Invariant violation that valid inputs can never trigger.

    Deliberately not a DomainError: if one of these escapes, it is a bug
    in this package, not a problem with the input.
    """
