"""Shared exception types for resource and tolerance failures."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An enumeration or search would exceed its work budget; no partial answer."""

    def __init__(self, message: str, needed: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.budget = budget


class ToleranceError(RuntimeError):
    """A truncated computation hit its hard cap before meeting the tolerance.

    Carries the partial value so callers can still inspect it.
    """

    def __init__(self, message: str, partial: float, terms: int):
        super().__init__(message)
        self.partial = partial
        self.terms = terms
