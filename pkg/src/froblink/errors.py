"""Exception types raised across froblink.

The types subclass the builtin exceptions they refine, so callers that only
care about ``ValueError`` or ``RuntimeError`` keep working. The CLI maps them
to exit codes.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


class IdealInputError(ValueError):
    """An ideal violates the contract of the operation it was passed to."""


class BadPrimeError(IdealInputError):
    """The requested prime is at or below the bad-prime bound of the input."""

    def __init__(self, p: int, reason: str) -> None:
        """Create the error for prime ``p``."""
        super().__init__(f"Bad prime {p}: {reason}")
        self.p = p


class IdealSyntaxError(ValueError):
    """An ideal file could not be parsed."""

    def __init__(self, message: str, line: int, column: int) -> None:
        """Create the error at 1-based ``line`` and ``column``."""
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ResourceBudgetExceeded(RuntimeError):
    """A computation hit one of the configured budgets."""

    def __init__(self, budget: str, value: int, limit: int) -> None:
        """Create the error for ``budget`` which reached ``value`` above ``limit``."""
        super().__init__(f"Budget '{budget}' exceeded: {value} > {limit}")
        self.budget = budget
        self.value = value
        self.limit = limit
