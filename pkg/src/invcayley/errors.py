"""Exceptions shared across the package."""

from __future__ import annotations


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of steps before reaching a verdict.

    Raised instead of returning ``False`` so that "no" and "don't know"
    can never be confused by a caller.
    """

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: search budget of {budget} steps exhausted")
        self.what = what
        self.budget = budget


class Budget:
    """Mutable step counter shared by the cooperating parts of one search."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, steps: int = 1) -> bool:
        """Charge ``steps``; return False once the limit is passed."""
        self.used += steps
        return self.used <= self.limit

    @property
    def exhausted(self) -> bool:
        return self.used > self.limit
