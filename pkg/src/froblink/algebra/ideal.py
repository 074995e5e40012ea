"""Contains the Ideal type and Groebner-basis driven ideal operations.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import itertools
import logging
import math
import threading
from typing import Iterable, Sequence

from froblink.algebra.ffpoly import (
    GREVLEX,
    MonomialOrder,
    Poly,
    PolynomialRing,
    elimination_order,
    format_poly,
)
from froblink.algebra.groebner import GroebnerBasis, groebner_basis, normal_form
from froblink.algebra.params import DEFAULT_BUDGETS, Budgets
from froblink.errors import IdealInputError, RingMismatchError

LOGGER = logging.getLogger(__name__)


class Ideal:
    """Finitely generated ideal of a PolynomialRing.

    Zero generators are dropped and duplicates removed, keeping the first
    occurrence. Reduced Groebner bases are cached per monomial order; the cache
    has a single writer at a time.
    """

    def __init__(self, ring: PolynomialRing, gens: Iterable[Poly] = ()):
        """Create the ideal of ``ring`` generated by ``gens``."""
        self._ring = ring
        seen = set()
        kept = []
        for f in gens:
            if tuple(str(s) for s in f.ring.symbols) != ring.variables:
                raise RingMismatchError(f"Generator {f} does not belong to {ring}.")
            f = ring.convert(f)
            if f and f not in seen:
                seen.add(f)
                kept.append(f)
        self._gens = tuple(kept)
        self._groebner: dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def unit(cls, ring: PolynomialRing) -> Ideal:
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring: PolynomialRing) -> Ideal:
        return cls(ring, [])

    @property
    def ring(self) -> PolynomialRing:
        return self._ring

    @property
    def gens(self) -> tuple[Poly, ...]:
        return self._gens

    @property
    def is_zero(self) -> bool:
        return not self._gens

    def groebner(
        self, order: MonomialOrder | None = None, budgets: Budgets = DEFAULT_BUDGETS
    ) -> GroebnerBasis:
        """Reduced Groebner basis for ``order`` (default: the ring's order)."""
        order = order or self._ring.order
        with self._lock:
            cached = self._groebner.get(order)
            if cached is None:
                cached = groebner_basis(self._gens, self._ring.with_order(order), budgets)
                self._groebner[order] = cached
        return cached

    def __iter__(self):
        return iter(self._gens)

    def __len__(self):
        return len(self._gens)

    def __repr__(self):
        return f"Ideal({self._ring}; {self})"

    def __str__(self):
        return "(" + ", ".join(format_poly(f) for f in self._gens) + ")"


def _check_same_ring(*ideals: Ideal) -> None:
    if len({I.ring.variables for I in ideals}) > 1 or len({I.ring.p for I in ideals}) > 1:
        raise RingMismatchError("Ideals belong to different rings.")


def groebner(
    I: Ideal, order: MonomialOrder | None = None, budgets: Budgets = DEFAULT_BUDGETS
) -> GroebnerBasis:
    """Reduced Groebner basis of ``I`` (cached on the ideal)."""
    return I.groebner(order, budgets)


def ideal_member(f: Poly, I: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Whether ``f`` lies in ``I``."""
    if not f:
        return True
    if I.is_zero:
        return False
    return not normal_form(f, I.groebner(budgets=budgets))


def ideal_contains(I: Ideal, J: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Whether J is a subset of I."""
    _check_same_ring(I, J)
    return all(ideal_member(g, I, budgets) for g in J.gens)


def ideal_equal(I: Ideal, J: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Equality as sets, by mutual containment."""
    return ideal_contains(I, J, budgets) and ideal_contains(J, I, budgets)


def is_unit(I: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Whether I is the whole ring."""
    if any(f.is_ground for f in I.gens):
        return True
    return not I.is_zero and I.groebner(budgets=budgets).is_unit


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I, J)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def ideal_power(I: Ideal, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Ordinary power I^n, generated by products over multisets of generators.

    Raises:
        ResourceBudgetExceeded: if there are more multisets than
            ``budgets.max_generators``.
    """
    if n < 0:
        raise ValueError(f"Ideal power must be non-negative, got {n}.")
    if n == 0:
        return Ideal.unit(I.ring)
    budgets.check("max_generators", math.comb(len(I.gens) + n - 1, n))
    products = []
    for combo in itertools.combinations_with_replacement(I.gens, n):
        f = I.ring.one
        for g in combo:
            f = f * g
        products.append(f)
    return Ideal(I.ring, products)


def extend_ideal(I: Ideal, ring: PolynomialRing) -> Ideal:
    """Extension of I to a ring whose variables contain those of I."""
    missing = set(I.ring.variables) - set(ring.variables)
    if missing or ring.p != I.ring.p:
        raise RingMismatchError(f"Cannot extend {I.ring} to {ring}.")
    return Ideal(ring, [ring.convert(f) for f in I.gens])


def variable_ideal(ring: PolynomialRing, names: Sequence[str] | None = None) -> Ideal:
    """Ideal generated by the named variables (default: all)."""
    names = ring.variables if names is None else names
    return Ideal(ring, [ring.gen(name) for name in names])


def variable_indices(m: Ideal) -> tuple[int, ...]:
    """Indices of the variables generating ``m``.

    Raises:
        IdealInputError: if some generator is not a single variable.
    """
    indices = []
    for f in m.gens:
        if len(f) != 1 or f.LC != m.ring.sympy_ring.domain.one or sum(f.LM) != 1:
            raise IdealInputError(f"{m} is not generated by variables.")
        indices.append(f.LM.index(1))
    if not indices:
        raise IdealInputError("The zero ideal is not a locus.")
    return tuple(sorted(set(indices)))


def _tag_variable(ring: PolynomialRing) -> str:
    name = "t"
    while name in ring.variables:
        name += "_"
    return name


def ideal_intersect(I: Ideal, J: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Intersection via the tag variable: eliminate t from t*I + (1-t)*J."""
    _check_same_ring(I, J)
    ring = I.ring
    if I.is_zero or J.is_zero:
        return Ideal.zero(ring)
    if is_unit(I, budgets):
        return J
    if is_unit(J, budgets):
        return I
    tagged = ring.extend([_tag_variable(ring)], prepend=True, order=elimination_order(1))
    t = tagged.gens[0]
    gens = [t * tagged.convert(f) for f in I.gens]
    gens += [(tagged.one - t) * tagged.convert(g) for g in J.gens]
    gb = groebner_basis(gens, tagged, budgets)
    kept = [g for g in gb.basis if all(monom[0] == 0 for monom in g.keys())]
    LOGGER.debug("Intersection kept %d of %d basis elements.", len(kept), len(gb.basis))
    return Ideal(ring, [ring.convert(g) for g in kept])


def ideal_colon(I: Ideal, J: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Colon ideal (I : J) = intersection over generators f of J of (I : f).

    Each (I : f) is obtained by dividing the generators of I and (f) by f.
    """
    _check_same_ring(I, J)
    ring = I.ring
    result: Ideal | None = None
    for f in J.gens:
        if ideal_member(f, I, budgets):
            continue
        meet = ideal_intersect(I, Ideal(ring, [f]), budgets)
        part = Ideal(ring, [g.exquo(f) for g in meet.gens])
        result = part if result is None else ideal_intersect(result, part, budgets)
    return Ideal.unit(ring) if result is None else result


def ideal_dimension(I: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Krull dimension of R/I, -1 for the unit ideal.

    Computed as the size of a largest set of variables containing the support of
    no leading monomial of a grevlex Groebner basis.
    """
    n = I.ring.ngens
    if I.is_zero:
        return n
    gb = I.groebner(GREVLEX, budgets)
    if gb.is_unit:
        return -1
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in gb.leading_monomials()]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            chosen = set(subset)
            if not any(support <= chosen for support in supports):
                return size
    return 0


def ideal_height(I: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Height n - dim(R/I) of a proper ideal."""
    dimension = ideal_dimension(I, budgets)
    if dimension < 0:
        raise IdealInputError("The unit ideal has no height.")
    return I.ring.ngens - dimension
