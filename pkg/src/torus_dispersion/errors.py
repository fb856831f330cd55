"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DispersionError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(DispersionError, ValueError):
    """Malformed input: non-finite coordinates, bad CSV cells, bad parameters."""


class DimensionMismatchError(InvalidInputError):
    """Vectors or boxes of incompatible dimension were combined."""


class BudgetExceededError(DispersionError):
    """The exhaustive search would examine more candidates than allowed."""

    def __init__(self, candidates: int, budget: int):
        self.candidates = candidates
        self.budget = budget
        super().__init__(
            f"candidate product {candidates} exceeds budget {budget}; "
            "raise the budget or use sampling mode"
        )


class WrongCaseError(DispersionError, ValueError):
    """A case-specific construction was called outside its case."""


class InvariantViolationError(DispersionError, AssertionError):
    """An internal certificate check failed. Indicates a bug."""
