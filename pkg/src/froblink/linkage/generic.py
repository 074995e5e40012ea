"""Contains the generic linkage of an ideal and its structural checks.

For I = (f_1, ..., f_r) of height c in R = F_p[x], the generic link lives in
S = R[u_ij] with 1 <= i <= c, 1 <= j <= r. The linking ideal L is generated by
g_i = sum_j u_ij f_j and the linked ideal is J = (L : I S).

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import dataclasses
import logging
from typing import NamedTuple

from froblink.algebra.ffpoly import Poly, PolynomialRing
from froblink.algebra.ideal import (
    Ideal,
    extend_ideal,
    ideal_colon,
    ideal_contains,
    ideal_height,
    ideal_power,
    ideal_product,
    is_unit,
    variable_ideal,
)
from froblink.algebra.params import DEFAULT_BUDGETS, Budgets
from froblink.errors import IdealInputError
from froblink.frobenius.powers import nu_bracket

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass
class LinkageData:
    """Generic link of an ideal I of R."""

    ideal: Ideal
    extended: Ideal
    linking: Ideal
    linked: Ideal
    height: int
    u_names: tuple[tuple[str, ...], ...]

    @property
    def base_ring(self) -> PolynomialRing:
        return self.ideal.ring

    @property
    def ring(self) -> PolynomialRing:
        return self.linking.ring

    @property
    def generators(self) -> tuple[Poly, ...]:
        """The generic combinations g_1, ..., g_c."""
        return self.linking.gens

    @property
    def r(self) -> int:
        return len(self.ideal.gens)

    @property
    def n_S(self) -> int:
        return self.ring.ngens


def generic_variable_names(c: int, r: int) -> tuple[tuple[str, ...], ...]:
    """Names u_ij of the generic coefficients, ``u12`` or ``u1_12`` when indices exceed 9."""
    separator = "_" if c > 9 or r > 9 else ""
    return tuple(tuple(f"u{i}{separator}{j}" for j in range(1, r + 1)) for i in range(1, c + 1))


def origin_maximal_ideal(ring: PolynomialRing) -> Ideal:
    """The ideal of all variables, the maximal ideal of the origin."""
    return variable_ideal(ring)


def build_generic_linkage(I: Ideal, budgets: Budgets = DEFAULT_BUDGETS) -> LinkageData:
    """Build S, L and J for the ideal I.

    Raises:
        IdealInputError: if I is zero, the unit ideal, or has more height than
            generators, or if a generic variable name is already taken.
    """
    if I.is_zero or is_unit(I, budgets):
        raise IdealInputError(f"Generic linkage needs a proper nonzero ideal, got {I}.")
    c = ideal_height(I, budgets)
    r = len(I.gens)
    if c > r:
        raise IdealInputError(f"Height {c} exceeds the generator count {r}.")

    names = generic_variable_names(c, r)
    try:
        ring = I.ring.extend([name for row in names for name in row])
    except ValueError as exc:
        raise IdealInputError(str(exc)) from exc

    extended = extend_ideal(I, ring)
    linking_gens = []
    for row in names:
        g = ring.zero
        for name, f in zip(row, extended.gens):
            g += ring.gen(name) * f
        linking_gens.append(g)
    linking = Ideal(ring, linking_gens)
    linked = ideal_colon(linking, extended, budgets)
    LOGGER.info(
        "Generic link of %s: height %d, %d generators, S has %d variables, J has %d generators.",
        I,
        c,
        r,
        ring.ngens,
        len(linked.gens),
    )
    return LinkageData(I, extended, linking, linked, c, names)


class LinkageChecks(NamedTuple):
    """Structural properties every generic link must have."""

    linking_in_ideal: bool
    linking_in_linked: bool
    product_in_linking: bool
    linking_height: bool
    # L is generated by exactly c elements.
    linking_generator_count: bool

    @property
    def ok(self) -> bool:
        return all(self)


def check_linkage(ld: LinkageData, budgets: Budgets = DEFAULT_BUDGETS) -> LinkageChecks:
    """Verify L in I S, L in J, I J in L, ht L = c and that L has c generators."""
    checks = LinkageChecks(
        linking_in_ideal=ideal_contains(ld.extended, ld.linking, budgets),
        linking_in_linked=ideal_contains(ld.linked, ld.linking, budgets),
        product_in_linking=ideal_contains(
            ld.linking, ideal_product(ld.extended, ld.linked), budgets
        ),
        linking_height=ideal_height(ld.linking, budgets) == ld.height,
        linking_generator_count=len(ld.linking.gens) == ld.height,
    )
    if not checks.ok:
        LOGGER.warning("Linkage of %s fails structural checks: %s", ld.ideal, checks)
    return checks


class LevelwiseLce(NamedTuple):
    nu_I: int
    nu_L: int
    nu_J: int


def compare_lce_levelwise(
    ld: LinkageData, e: int, fast: bool = False, budgets: Budgets = DEFAULT_BUDGETS
) -> LevelwiseLce:
    """nu_bracket of I^c, L^c and J^c at the origin, level e.

    I^c is evaluated in R: its generators only involve the variables of R and the
    bracket power of the origin of S meets R in that of the origin of R, so the
    value equals the one of (I S)^c in S.
    """
    c = ld.height
    nu_I = nu_bracket(
        ideal_power(ld.ideal, c, budgets), e, origin_maximal_ideal(ld.base_ring), fast, budgets
    )
    m_S = origin_maximal_ideal(ld.ring)
    nu_L = nu_bracket(ideal_power(ld.linking, c, budgets), e, m_S, fast, budgets)
    nu_J = nu_bracket(ideal_power(ld.linked, c, budgets), e, m_S, fast, budgets)
    if nu_I != nu_L:
        LOGGER.warning(
            "Levelwise lce mismatch for %s at p=%d, e=%d: nu_I=%d nu_L=%d nu_J=%d",
            ld.ideal,
            ld.base_ring.p,
            e,
            nu_I,
            nu_L,
            nu_J,
        )
    return LevelwiseLce(nu_I, nu_L, nu_J)
