"""Exception types shared across the package."""

from __future__ import annotations


class ConnFactorError(Exception):
    """Base class for every error raised by this package."""


class MalformedInput(ConnFactorError, ValueError):
    """Text input (edge list, f-values, factor file) could not be parsed."""


class PreconditionViolated(ConnFactorError, ValueError):
    """Arguments fall outside the range an operation is defined for."""


class InternalInconsistency(ConnFactorError, RuntimeError):
    """A certificate produced internally failed verification.

    Seeing this means there is a bug, not a bad input.
    """


class InfeasibleConstraint(ConnFactorError):
    """A distance constraint is structurally unsatisfiable."""


class NotEquitable(ConnFactorError, ValueError):
    """The red/blue coloring has a vertex with unequal red and blue degree."""


class NotASwitch(ConnFactorError, ValueError):
    """The circuit's red edges are not all in the factor, or a blue one is."""


class BudgetExhausted(ConnFactorError):
    """Brute-force search stopped before it finished.

    ``partial`` holds whatever was collected before the budget ran out.
    """

    def __init__(self, message: str, partial: list | None = None) -> None:
        super().__init__(message)
        self.partial = partial if partial is not None else []
        self.complete = False
