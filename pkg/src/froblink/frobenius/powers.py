"""Contains Frobenius powers and Frobenius roots of ideals over F_p.

For an integer k with base-p digits k_0, ..., k_s the generalized Frobenius power
is I^{[k]} = I^{k_0} (I^{k_1})^{[p]} ... (I^{k_s})^{[p^s]}. Combined with the
Frobenius root I^{[1/q]} this gives rational powers I^{[k/q]} and, through
stabilization, real powers I^{[t]}.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
import math
from fractions import Fraction
from typing import NamedTuple, Sequence

from froblink.algebra.ffpoly import Monomial, Poly, level_q, poly_frobenius_pow
from froblink.algebra.ideal import Ideal, ideal_equal, ideal_power
from froblink.algebra.params import DEFAULT_BUDGETS, Budgets
from froblink.frobenius.locus import BracketLocus, FactorGroup

LOGGER = logging.getLogger(__name__)


class FrobeniusDigits(NamedTuple):
    """Base-p expansion of k, least significant digit first."""

    k: int
    p: int
    digits: tuple[int, ...]


def frobenius_digits(k: int, p: int) -> FrobeniusDigits:
    """Base-p digits of ``k`` (empty for k = 0)."""
    if k < 0:
        raise ValueError(f"Frobenius exponent must be non-negative, got {k}.")
    if p < 2:
        raise ValueError(f"Base must be at least 2, got {p}.")
    digits = []
    rest = k
    while rest:
        rest, digit = divmod(rest, p)
        digits.append(digit)
    return FrobeniusDigits(k, p, tuple(digits))


def compact_generators(gens: Sequence[Poly]) -> list[Poly]:
    """Make generators monic, drop duplicates and those inside a monomial generator."""
    monic: list[Poly] = []
    seen = set()
    for f in gens:
        if not f:
            continue
        f = f.monic()
        if f not in seen:
            seen.add(f)
            monic.append(f)
    if any(f.is_ground for f in monic):
        return [monic[0].ring.one]
    monomials = [f.LM for f in monic if f.is_term]
    ring = monic[0].ring if monic else None
    kept = []
    for f in monic:
        absorbed = any(
            all(ring.monomial_div(term, m) is not None for term in f.keys())
            and not (f.is_term and f.LM == m)
            for m in monomials
        )
        if not absorbed:
            kept.append(f)
    return kept


def bracket_power(I: Ideal, e: int, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Frobenius power I^{[p^e]}, generated by the p^e-th powers of the generators."""
    level_q(I.ring.p, e, budgets)
    return Ideal(I.ring, [poly_frobenius_pow(f, e) for f in I.gens])


def _split_exponents(monom: Monomial, q: int) -> tuple[Monomial, Monomial]:
    quotient, remainder = zip(*(divmod(a, q) for a in monom))
    return tuple(quotient), tuple(remainder)


def frobenius_root(I: Ideal, e: int, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Frobenius root I^{[1/p^e]}, the smallest J with I contained in J^{[p^e]}.

    Every generator is written uniquely as a sum of x^mu * g_mu^q over exponents
    mu with entries below q; the g_mu of all generators generate the root.
    """
    q = level_q(I.ring.p, e, budgets)
    if e == 0:
        return I
    ring = I.ring.sympy_ring
    roots = []
    for f in I.gens:
        pieces: dict[Monomial, dict[Monomial, object]] = {}
        for monom, coeff in f.items():
            quotient, remainder = _split_exponents(monom, q)
            pieces.setdefault(remainder, {})[quotient] = coeff
        for remainder in sorted(pieces):
            roots.append(ring.from_dict(pieces[remainder], ring.domain))
    return Ideal(I.ring, compact_generators(roots))


def generalized_power(I: Ideal, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Generalized Frobenius power I^{[k]} as a full ideal.

    Raises:
        ResourceBudgetExceeded: if the product of the digit pieces would have more
            generators than ``budgets.max_generators``.
    """
    digits = frobenius_digits(k, I.ring.p).digits
    if k == 0:
        return Ideal.unit(I.ring)
    if I.is_zero:
        return I
    if any(f.is_ground for f in I.gens):
        return Ideal.unit(I.ring)
    level_q(I.ring.p, len(digits) - 1, budgets)

    pieces = []
    for i, digit in enumerate(digits):
        if digit == 0:
            continue
        ordinary = ideal_power(I, digit, budgets)
        pieces.append([poly_frobenius_pow(f, i) for f in ordinary.gens])
    budgets.check("max_generators", math.prod(len(piece) for piece in pieces))

    products = []
    for combo in itertools.product(*pieces):
        f = I.ring.one
        for factor in combo:
            f = f * factor
        products.append(f)
    LOGGER.debug("Generalized power [%d] has %d raw generators.", k, len(products))
    return Ideal(I.ring, compact_generators(products))


def rational_power(I: Ideal, k: int, e: int, budgets: Budgets = DEFAULT_BUDGETS) -> Ideal:
    """Rational Frobenius power I^{[k/p^e]} = (I^{[k]})^{[1/p^e]}."""
    return frobenius_root(generalized_power(I, k, budgets), e, budgets)


@dataclasses.dataclass(frozen=True)
class RealPowerRequest:
    """Parameters of a real Frobenius power computation."""

    # Exponent, kept exact.
    t: Fraction
    # Largest level tried while waiting for stabilization.
    k_max: int = 8
    # Number of consecutive equal values that count as stabilized.
    s: int = 2

    def __post_init__(self):
        """Normalize and validate."""
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t < 0:
            raise ValueError(f"Exponent must be non-negative, got {self.t}.")
        if self.k_max < 1 or self.s < 1:
            raise ValueError("k_max and s must be positive.")


class RealPowerResult(NamedTuple):
    ideal: Ideal
    certified: bool
    level: int


def ceil_scaled(t: Fraction, q: int) -> int:
    """Exact ceiling of t*q."""
    return -((-t.numerator * q) // t.denominator)


def floor_scaled(t: Fraction, q: int) -> int:
    """Exact floor of t*q."""
    return (t.numerator * q) // t.denominator


def real_power(
    I: Ideal, request: RealPowerRequest, budgets: Budgets = DEFAULT_BUDGETS
) -> RealPowerResult:
    """Real Frobenius power I^{[t]}, approximated by I^{[ceil(t p^k)/p^k]}.

    Returns the first value that repeats for ``request.s`` consecutive levels as
    certified, otherwise the value at ``request.k_max`` uncertified.
    """
    p = I.ring.p
    previous: Ideal | None = None
    run = 0
    for k in range(1, request.k_max + 1):
        value = rational_power(I, ceil_scaled(request.t, p**k), k, budgets)
        if previous is not None and ideal_equal(value, previous, budgets):
            run += 1
        else:
            run = 1
        previous = value
        if run >= request.s:
            return RealPowerResult(value, True, k)
    LOGGER.warning("I^[%s] did not stabilize up to level %d.", request.t, request.k_max)
    return RealPowerResult(previous, False, request.k_max)


def bracket_groups(I: Ideal, k: int, locus: BracketLocus) -> list[FactorGroup]:
    """Factor groups whose products are the generators of I^{[k]} modulo m^{[q]}.

    The digit i contributes k_i factors among the p^i-th powers of the generators.
    High digits come first since their factors vanish soonest.
    """
    digits = frobenius_digits(k, I.ring.p).digits
    groups = []
    for i in reversed(range(len(digits))):
        if digits[i]:
            candidates = [locus.frobenius(f, i) for f in I.gens]
            groups.append((candidates, digits[i]))
    return groups


def _bracket_survives(I: Ideal, k: int, locus: BracketLocus) -> bool:
    return locus.has_surviving_product(bracket_groups(I, k, locus))


def bracket_profile(
    I: Ideal, e: int, m: Ideal, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[bool, ...]:
    """Whether I^{[k]} is outside m^{[q]}, for every k = 0, ..., q-1."""
    locus = BracketLocus.of(m, level_q(I.ring.p, e, budgets))
    locus.check(I)
    return tuple(_bracket_survives(I, k, locus) for k in range(locus.q))


def is_monotone_profile(profile: Sequence[bool]) -> bool:
    """Whether the True entries of a profile form a prefix."""
    return all(profile[k] or not profile[k + 1] for k in range(len(profile) - 1))


def nu_bracket(
    I: Ideal,
    e: int,
    m: Ideal,
    fast: bool = False,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> int:
    """Largest k <= q-1 with I^{[k]} not contained in m^{[q]}.

    If I is not inside m no bracket power is contained and the cap q-1 is
    returned; callers flag this case through ``BracketLocus.ideal_in_maximal``.

    Args:
        I: The ideal.
        e: The level, q = p^e.
        m: A maximal ideal generated by variables.
        fast: Binary-search instead of scanning when the profile one level below is
            monotone.
        budgets: Resource budgets.
    """
    q = level_q(I.ring.p, e, budgets)
    locus = BracketLocus.of(m, q)
    locus.check(I)
    if not locus.ideal_in_maximal(I):
        LOGGER.warning("%s is not inside %s; returning the cap %d.", I, m, q - 1)
        return q - 1
    if I.is_zero:
        return 0

    if fast and e >= 2 and is_monotone_profile(bracket_profile(I, e - 1, m, budgets)):
        lo, hi = 0, q - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if _bracket_survives(I, mid, locus):
                lo = mid
            else:
                hi = mid - 1
        LOGGER.debug("nu_bracket by binary search at q=%d: %d", q, lo)
        return lo

    for k in range(q - 1, -1, -1):
        if _bracket_survives(I, k, locus):
            LOGGER.debug("nu_bracket by downward scan at q=%d: %d", q, k)
            return k
    return 0
