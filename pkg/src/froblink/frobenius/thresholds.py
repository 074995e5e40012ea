"""Contains nu-invariants, F-threshold estimates, test ideals and their checks.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from typing import Literal, NamedTuple

from froblink.algebra.ffpoly import Poly, format_poly, level_q
from froblink.algebra.ideal import (
    Ideal,
    ideal_contains,
    ideal_equal,
    ideal_power,
    is_unit,
)
from froblink.algebra.params import DEFAULT_BUDGETS, Budgets
from froblink.errors import IdealInputError
from froblink.frobenius.locus import BracketLocus
from froblink.frobenius.powers import (
    bracket_profile,
    ceil_scaled,
    floor_scaled,
    frobenius_root,
    is_monotone_profile,
    nu_bracket,
)

LOGGER = logging.getLogger(__name__)

ThresholdKind = Literal["fpt", "lce"]


class ThresholdRow(NamedTuple):
    """Estimate at one level: lower <= threshold <= upper."""

    e: int
    q: int
    nu: int
    lower: Fraction
    upper: Fraction
    certified: bool


@dataclasses.dataclass
class ThresholdTable:
    """Per-level nu-invariants of one ideal."""

    ideal_id: str
    kind: ThresholdKind
    p: int
    locus: tuple[str, ...]
    rows: list[ThresholdRow] = dataclasses.field(default_factory=list)
    # Set when the estimate is undefined, e.g. the ideal is not inside the locus.
    flagged: bool = False

    def records(self) -> list[dict[str, object]]:
        """Rows in the column order ideal_id,kind,p,e,q,nu,lower,upper,certified."""
        return [
            {
                "ideal_id": self.ideal_id,
                "kind": self.kind,
                "p": self.p,
                "e": row.e,
                "q": row.q,
                "nu": row.nu,
                "lower": str(row.lower),
                "upper": str(row.upper),
                "certified": "true" if row.certified else "false",
            }
            for row in self.rows
        ]


def nu_power(
    I: Ideal,
    e: int,
    m: Ideal,
    bracket: tuple[int, int] | None = None,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> int:
    """Largest r with I^r not contained in m^{[q]}.

    The predicate "I^r is outside m^{[q]}" is decreasing in r, so the value is found
    by binary search.

    Args:
        I: The ideal, contained in m.
        e: The level, q = p^e.
        m: A maximal ideal generated by variables.
        bracket: Known bounds (lo, hi) with the predicate true at lo.
        budgets: Resource budgets.

    Raises:
        IdealInputError: if I is not inside m, where the invariant is unbounded.
    """
    q = level_q(I.ring.p, e, budgets)
    locus = BracketLocus.of(m, q)
    locus.check(I)
    if I.is_zero:
        return 0
    if not locus.ideal_in_maximal(I):
        raise IdealInputError(f"{I} is not inside {m}; the F-pure threshold is undefined.")

    lo = 0
    hi = len(locus.variables) * (q - 1) // locus.order_of_vanishing(I)
    if bracket is not None:
        lo, hi = max(lo, bracket[0]), min(hi, bracket[1])
    candidates = [locus.truncate(f) for f in I.gens]
    LOGGER.debug("nu_power search at q=%d in [%d, %d].", q, lo, hi)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if locus.has_surviving_product([(candidates, mid)]):
            lo = mid
        else:
            hi = mid - 1
    return lo


def fpt_estimate(
    I: Ideal,
    m: Ideal,
    e_max: int,
    ideal_id: str = "I",
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ThresholdTable:
    """F-pure threshold bounds nu/q <= Fpt(I) <= (nu + g)/q for e = 1..e_max.

    Here g is the number of generators of I. Each level searches only the window
    p*nu <= nu' <= p*nu + g(p-1) left by the previous one.
    """
    if e_max < 1:
        raise ValueError(f"e_max must be at least 1, got {e_max}.")
    p = I.ring.p
    g = max(len(I.gens), 1)
    table = ThresholdTable(ideal_id, "fpt", p, _locus_names(m))
    previous: int | None = None
    for e in range(1, e_max + 1):
        q = level_q(p, e, budgets)
        window = None if previous is None else (p * previous, p * previous + g * (p - 1))
        nu = nu_power(I, e, m, window, budgets)
        table.rows.append(ThresholdRow(e, q, nu, Fraction(nu, q), Fraction(nu + g, q), True))
        previous = nu
    return table


def lce_estimate(
    I: Ideal,
    m: Ideal,
    e_max: int,
    ideal_id: str = "I",
    fast: bool = False,
    verify_monotone: bool = False,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> ThresholdTable:
    """Least critical exponent estimates from nu_bracket.

    Upper bounds (nu+1)/q are marked certified only when ``verify_monotone`` is
    set and the full profile of the level is monotone.
    """
    if e_max < 1:
        raise ValueError(f"e_max must be at least 1, got {e_max}.")
    p = I.ring.p
    table = ThresholdTable(ideal_id, "lce", p, _locus_names(m))
    if is_unit(I, budgets) or not BracketLocus.of(m, 1).ideal_in_maximal(I):
        LOGGER.warning("%s is not inside %s; the lce estimate is undefined.", I, m)
        table.flagged = True
    for e in range(1, e_max + 1):
        q = level_q(p, e, budgets)
        if verify_monotone and not table.flagged:
            profile = bracket_profile(I, e, m, budgets)
            nu = max(k for k, survives in enumerate(profile) if survives)
            certified = is_monotone_profile(profile)
        else:
            nu = nu_bracket(I, e, m, fast, budgets)
            certified = False
        table.rows.append(ThresholdRow(e, q, nu, Fraction(nu, q), Fraction(nu + 1, q), certified))
    return table


def _locus_names(m: Ideal) -> tuple[str, ...]:
    return tuple(format_poly(f) for f in m.gens)


class TestIdealResult(NamedTuple):
    """Test ideal tau(I^t) with its stabilization level."""

    t: Fraction
    ideal: Ideal
    stabilized_at_e: int
    certified: bool


def test_ideal(
    I: Ideal, t: Fraction, e_max: int = 8, budgets: Budgets = DEFAULT_BUDGETS
) -> TestIdealResult:
    """tau(I^t) as the stable value of A_e = (I^{ceil(t p^e)})^{[1/p^e]}.

    Returns the first A_e equal to A_{e+1} as certified, otherwise A_{e_max}.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError(f"Exponent must be non-negative, got {t}.")
    p = I.ring.p

    def approximation(e: int) -> Ideal:
        return frobenius_root(ideal_power(I, ceil_scaled(t, p**e), budgets), e, budgets)

    current = approximation(1)
    for e in range(1, e_max):
        following = approximation(e + 1)
        if ideal_equal(current, following, budgets):
            return TestIdealResult(t, current, e, True)
        current = following
    LOGGER.warning("tau(I^%s) did not stabilize up to e=%d.", t, e_max)
    return TestIdealResult(t, current, e_max, False)


# Not a pytest test despite the name.
test_ideal.__test__ = False


def is_f_pure_level(
    I: Ideal,
    t: Fraction,
    e: int,
    m: Ideal,
    strong: bool = False,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> bool:
    """Whether I^{floor(t(q-1))} is outside m^{[q]} (the F-purity witness at level e).

    With ``strong`` the exponent is ceil(tq), the strongly F-pure variant.
    """
    t = Fraction(t)
    q = level_q(I.ring.p, e, budgets)
    locus = BracketLocus.of(m, q)
    locus.check(I)
    exponent = ceil_scaled(t, q) if strong else floor_scaled(t, q - 1)
    candidates = [locus.truncate(f) for f in I.gens]
    if exponent == 0:
        return locus.has_surviving_product([])
    return locus.has_surviving_product([(candidates, exponent)])


def is_strongly_f_regular(
    I: Ideal, t: Fraction, e_max: int = 8, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[bool, bool]:
    """Whether tau(I^t) is the unit ideal, with the certification of tau."""
    result = test_ideal(I, t, e_max, budgets)
    return is_unit(result.ideal, budgets), result.certified


def check_fpt_scaling(
    I: Ideal, n: int, e: int, m: Ideal, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """Whether nu_{I^n}(q) = floor(nu_I(q)/n), which holds since (I^n)^r = I^{nr}."""
    if n < 1:
        raise ValueError(f"Power must be positive, got {n}.")
    return nu_power(ideal_power(I, n, budgets), e, m, budgets=budgets) == nu_power(
        I, e, m, budgets=budgets
    ) // n


def skoda_check(
    I: Ideal, mexp: int, e_max: int = 8, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[bool, bool]:
    """Whether tau(I^mexp) is contained in I, with the certification of tau."""
    if mexp < len(I.gens):
        raise ValueError(f"Skoda exponent {mexp} is below the generator count {len(I.gens)}.")
    result = test_ideal(ideal_power(I, mexp, budgets), Fraction(1), e_max, budgets)
    return ideal_contains(I, result.ideal, budgets), result.certified


def check_height_power_cap(
    I: Ideal, c: int, e: int, m: Ideal, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """Whether nu_{I^c}(q) <= q - 1 for the height c of I."""
    q = level_q(I.ring.p, e, budgets)
    return nu_power(ideal_power(I, c, budgets), e, m, budgets=budgets) <= q - 1


class GapCheck(NamedTuple):
    """Levelwise comparison of the fpt and lce estimates of one ideal."""

    e: int
    gap: Fraction
    bound: Fraction
    applicable: bool
    holds: bool


def htw_gap_check(
    I: Ideal, e: int, m: Ideal, budgets: Budgets = DEFAULT_BUDGETS
) -> GapCheck:
    """Compare nu_power/q - nu_bracket/q against (g-1)/(p-1) + 2/q.

    The bound only applies when the least critical exponent is not 1, which is
    detected as nu_bracket < q - 1; otherwise the check is reported as not
    applicable and holds vacuously.
    """
    p = I.ring.p
    q = level_q(p, e, budgets)
    fpt_nu = nu_power(I, e, m, budgets=budgets)
    lce_nu = nu_bracket(I, e, m, budgets=budgets)
    gap = Fraction(fpt_nu - lce_nu, q)
    bound = Fraction(len(I.gens) - 1, p - 1) + Fraction(2, q)
    applicable = lce_nu < q - 1
    return GapCheck(e, gap, bound, applicable, not applicable or gap <= bound)


def element_lce_check(
    f: Poly, I: Ideal, e: int, m: Ideal, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """Levelwise check of Fpt(f) = Lce(f) <= Lce(I) for an element f of I."""
    principal = Ideal(I.ring, [f])
    nu_f = nu_power(principal, e, m, budgets=budgets)
    return nu_f == nu_bracket(principal, e, m, budgets=budgets) and nu_f <= nu_bracket(
        I, e, m, budgets=budgets
    )
