"""Contains Buchberger's algorithm and reduced Groebner bases over F_p.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import logging
from typing import NamedTuple, Sequence

from froblink.algebra.ffpoly import Monomial, Poly, PolynomialRing, check_same_ring
from froblink.algebra.params import DEFAULT_BUDGETS, Budgets
from froblink.errors import RingMismatchError

LOGGER = logging.getLogger(__name__)

Pair = tuple[int, int]


class GroebnerBasis(NamedTuple):
    """Reduced Groebner basis of an ideal for the order of ``ring``.

    The basis is monic, interreduced and sorted by descending leading monomial.
    An empty basis describes the zero ideal.
    """

    ring: PolynomialRing
    basis: tuple[Poly, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0] == self.ring.one

    def leading_monomials(self) -> list[Monomial]:
        return [g.LM for g in self.basis]


def spoly(f: Poly, g: Poly) -> Poly:
    """Return the s-polynomial of monic polynomials f and g."""
    ring = f.ring
    lcm = ring.monomial_lcm(f.LM, g.LM)
    s1 = f.mul_monom(ring.monomial_div(lcm, f.LM))
    s2 = g.mul_monom(ring.monomial_div(lcm, g.LM))
    return s1 - s2


def select(lmG: Sequence[Monomial], pairs: set[Pair], ring) -> Pair:
    """Pick the pair with the smallest lcm degree, ties broken by order then index."""

    def key(pair: Pair):
        lcm = ring.monomial_lcm(lmG[pair[0]], lmG[pair[1]])
        return sum(lcm), ring.order(lcm), pair

    return min(pairs, key=key)


def update(lmG: list[Monomial], pairs: set[Pair], lmf: Monomial, ring) -> set[Pair]:
    """Return the pair set after a polynomial with leading monomial ``lmf`` joins the basis.

    Applies the Gebauer-Moeller criteria, which contain Buchberger's coprime leading
    term criterion and the chain criterion.
    """
    lcm = ring.monomial_lcm
    mul = ring.monomial_mul
    div = ring.monomial_div
    new_index = len(lmG)

    pairs = {
        (i, j)
        for (i, j) in pairs
        if not div(lcm(lmG[i], lmG[j]), lmf)
        or lcm(lmG[i], lmG[j]) == lcm(lmG[i], lmf)
        or lcm(lmG[i], lmG[j]) == lcm(lmG[j], lmf)
    }

    by_lcm: dict[Monomial, list[int]] = {}
    for i in range(len(lmG)):
        by_lcm.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal_lcms: list[Monomial] = []
    for m in sorted(by_lcm, key=ring.order):
        if all(not div(m, other) for other in minimal_lcms):
            minimal_lcms.append(m)

    for m in minimal_lcms:
        coprime = any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in by_lcm[m])
        if not coprime:
            pairs.add((min(by_lcm[m]), new_index))
    return pairs


def minimalize(G: Sequence[Poly]) -> list[Poly]:
    """Return a minimal Groebner basis from an arbitrary Groebner basis G."""
    if not G:
        return []
    ring = G[0].ring
    minimal: list[Poly] = []
    for f in sorted(G, key=lambda h: ring.order(h.LM)):
        if all(not ring.monomial_div(f.LM, g.LM) for g in minimal):
            minimal.append(f)
    return minimal


def interreduce(G: Sequence[Poly]) -> list[Poly]:
    """Return the reduced Groebner basis from a minimal Groebner basis G."""
    reduced = []
    for i, g in enumerate(G):
        others = list(G[:i]) + list(G[i + 1 :])
        reduced.append((g.rem(others) if others else g).monic())
    return reduced


def _check_degree(f: Poly, budgets: Budgets) -> None:
    budgets.check("max_degree", max(sum(m) for m in f.keys()))


def buchberger(F: Sequence[Poly], budgets: Budgets = DEFAULT_BUDGETS) -> list[Poly]:
    """Return the reduced Groebner basis of the nonzero polynomials F.

    All polynomials must share one sympy ring, whose order is used.
    """
    F = [f for f in F if f]
    if not F:
        return []
    check_same_ring(*F)
    ring = F[0].ring
    if any(f.is_ground for f in F):
        return [ring.one]

    G: list[Poly] = []
    lmG: list[Monomial] = []
    pairs: set[Pair] = set()
    for f in F:
        f = f.monic()
        pairs = update(lmG, pairs, f.LM, ring)
        G.append(f)
        lmG.append(f.LM)

    processed = 0
    while pairs:
        i, j = select(lmG, pairs, ring)
        pairs.remove((i, j))
        processed += 1
        r = spoly(G[i], G[j]).rem(G)
        if not r:
            continue
        if r.is_ground:
            LOGGER.debug("Buchberger reached the unit ideal after %d pairs.", processed)
            return [ring.one]
        r = r.monic()
        _check_degree(r, budgets)
        pairs = update(lmG, pairs, r.LM, ring)
        G.append(r)
        lmG.append(r.LM)
        budgets.check("max_basis_size", len(G))

    reduced = interreduce(minimalize(G))
    LOGGER.debug(
        "Buchberger: %d generators, %d pairs processed, reduced basis of size %d.",
        len(F),
        processed,
        len(reduced),
    )
    return sorted(reduced, key=lambda g: ring.order(g.LM), reverse=True)


def groebner_basis(
    gens: Sequence[Poly], ring: PolynomialRing, budgets: Budgets = DEFAULT_BUDGETS
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens`` for the order of ``ring``."""
    converted = [ring.convert(f) for f in gens]
    return GroebnerBasis(ring, tuple(buchberger(converted, budgets)))


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    """Remainder of ``f`` on division by the basis; zero iff ``f`` is in the ideal.

    The result lives in the ring of ``f``.
    """
    if tuple(str(s) for s in f.ring.symbols) != gb.ring.variables:
        raise RingMismatchError("Polynomial and basis live in different rings.")
    if not gb.basis or not f:
        return f
    return gb.ring.convert(f).rem(list(gb.basis)).set_ring(f.ring)
