"""Contains arithmetic modulo the bracket power of a variable-generated maximal ideal.

Membership in m^{[q]} is a termwise test and dropping the terms that lie in
m^{[q]} is a ring map R -> R/m^{[q]}. Products can therefore be truncated factor by
factor, which keeps the questions "is some product of generators outside
m^{[q]}?" small enough to settle exactly by a pruned depth-first search.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Sequence

from froblink.algebra.ffpoly import (
    Poly,
    PolynomialRing,
    lowest_degree,
    poly_frobenius_pow,
    poly_in_bracket_max,
    truncate_bracket,
)
from froblink.algebra.ideal import Ideal, variable_indices
from froblink.errors import RingMismatchError

LOGGER = logging.getLogger(__name__)

# A group of factor candidates and how many of them (with repetition) to multiply.
FactorGroup = tuple[Sequence[Poly], int]


@dataclasses.dataclass(frozen=True)
class BracketLocus:
    """The quotient R/m^{[q]} for m generated by the variables at ``variables``."""

    ring: PolynomialRing
    variables: tuple[int, ...]
    q: int

    @classmethod
    def of(cls, m: Ideal, q: int) -> BracketLocus:
        """Locus for the variable ideal ``m`` at level q."""
        return cls(m.ring, variable_indices(m), q)

    def check(self, I: Ideal) -> None:
        if I.ring.variables != self.ring.variables or I.ring.p != self.ring.p:
            raise RingMismatchError(f"Ideal of {I.ring} used with locus in {self.ring}.")

    def truncate(self, f: Poly) -> Poly:
        return truncate_bracket(f, self.q, self.variables)

    def contains(self, f: Poly) -> bool:
        """Whether ``f`` lies in m^{[q]}."""
        return poly_in_bracket_max(f, self.q, self.variables)

    def mul(self, f: Poly, g: Poly) -> Poly:
        return self.truncate(f * g)

    def frobenius(self, f: Poly, e: int) -> Poly:
        """Truncated f^{p^e}."""
        return self.truncate(poly_frobenius_pow(f, e))

    def ideal_in_maximal(self, I: Ideal) -> bool:
        """Whether every generator of I vanishes at the locus (I is inside m)."""
        return all(poly_in_bracket_max(f, 1, self.variables) for f in I.gens)

    def order_of_vanishing(self, I: Ideal) -> int:
        """Smallest degree in the locus variables of a term of a generator."""
        return min(lowest_degree(f, self.variables) for f in I.gens)

    def has_surviving_product(self, groups: Sequence[FactorGroup]) -> bool:
        """Whether some product outside m^{[q]} can be formed from ``groups``.

        Each group contributes a multiset of ``count`` factors drawn from its
        candidates. Candidates must already be truncated. The search visits the
        multisets in nondecreasing index order and abandons a branch as soon as
        its partial product vanishes modulo m^{[q]}.
        """
        slots: list[tuple[int, Sequence[Poly]]] = []
        for index, (candidates, count) in enumerate(groups):
            candidates = [f for f in candidates if f]
            if count > 0 and not candidates:
                return False
            slots.extend((index, candidates) for _ in range(count))
        one = self.truncate(self.ring.one)
        if not slots:
            return bool(one)

        visited = 0
        frames = [[0, 0, one]]
        while frames:
            frame = frames[-1]
            position, k, partial = frame
            group, candidates = slots[position]
            if k >= len(candidates):
                frames.pop()
                continue
            frame[1] = k + 1
            product = self.mul(partial, candidates[k])
            visited += 1
            if not product:
                continue
            if position + 1 == len(slots):
                LOGGER.debug("Surviving product found after %d multiplications.", visited)
                return True
            start = k if slots[position + 1][0] == group else 0
            frames.append([position + 1, start, product])
        LOGGER.debug("All products vanish; %d multiplications.", visited)
        return False
