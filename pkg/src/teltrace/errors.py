"""Exceptions and the enumeration budget shared by all modules."""

from __future__ import annotations

import os

DEFAULT_BUDGET_BITS = 20
BUDGET_ENV = "TELTRACE_BUDGET_BITS"


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured bit budget."""

    def __init__(self, bits: int, budget: int, what: str = "enumeration"):
        super().__init__(f"{what} needs {bits} bits, budget is {budget}")
        self.bits = bits
        self.budget = budget


class InvariantError(RuntimeError):
    """A structural invariant of a value was violated."""


class NotCompositional(ValueError):
    """Two modules cannot be joined; ``component`` is the offending SCC."""

    def __init__(self, message: str, component=frozenset()):
        super().__init__(message)
        self.component = frozenset(component)


def budget_bits(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET_BITS


def check_budget(bits: int, budget: int | None = None, what: str = "enumeration") -> None:
    limit = budget_bits(budget)
    if bits > limit:
        raise BudgetExceeded(bits, limit, what)
