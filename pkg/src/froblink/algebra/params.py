"""Contains resource budgets for exact computations.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import dataclasses

from froblink.errors import ResourceBudgetExceeded


@dataclasses.dataclass(frozen=True)
class Budgets:
    """Limits that abort a computation with ResourceBudgetExceeded."""

    # Largest number of polynomials a Buchberger run may hold.
    max_basis_size: int = 5000
    # Largest total degree of a polynomial added to a Groebner basis.
    max_degree: int = 64
    # Largest number of generators of a generalized Frobenius power.
    max_generators: int = 20000
    # Largest q = p^e any level may reach.
    max_q: int = 2**20

    def __post_init__(self):
        """Validate budgets."""
        for field in dataclasses.fields(self):
            if getattr(self, field.name) < 1:
                raise ValueError(f"Budget {field.name} must be positive.")

    def check(self, name: str, value: int) -> None:
        """Raise if ``value`` exceeds the budget called ``name``."""
        limit = getattr(self, name)
        if value > limit:
            raise ResourceBudgetExceeded(name, value, limit)


DEFAULT_BUDGETS = Budgets()
