"""Tests for Buchberger's algorithm, checked against sympy's own implementation."""

from __future__ import annotations

import random

import pytest
from sympy.polys.groebnertools import groebner as sympy_groebner
from sympy.polys.groebnertools import is_reduced

from froblink.algebra.ffpoly import LEX, elimination_order
from froblink.algebra.groebner import buchberger, groebner_basis, normal_form
from froblink.algebra.ideal import Ideal, groebner
from froblink.algebra.params import Budgets
from froblink.errors import ResourceBudgetExceeded, RingMismatchError


def test_normal_form_of_example(ring_of):
    ring = ring_of("x, y", 5)
    x, y = ring.gens
    gb = groebner(Ideal(ring, [x - y]))
    assert normal_form(x**2 + y**2, gb) == 2 * y**2


def test_normal_form_is_zero_exactly_on_members(ring_of):
    ring = ring_of("x, y, z", 3)
    x, y, z = ring.gens
    gb = groebner(Ideal(ring, [x * y - z, y**2 - 1]))
    assert not normal_form((x * y - z) * (x + z) + (y**2 - 1) * x, gb)
    assert normal_form(x, gb)


def test_normal_form_rejects_foreign_polynomial(ring_of):
    gb = groebner(Ideal(ring_of("x, y", 3), [ring_of("x, y", 3).gens[0]]))
    with pytest.raises(RingMismatchError):
        normal_form(ring_of("a, b", 3).gens[0], gb)


@pytest.mark.parametrize("p", [2, 3, 5, 32003])
@pytest.mark.parametrize("order", [None, LEX])
def test_reduced_basis_matches_sympy(ring_of, p, order):
    rng = random.Random(p)
    base = ring_of("x, y, z", p)
    ring = base if order is None else base.with_order(order)
    for _ in range(4):
        gens = []
        for _ in range(rng.randint(2, 3)):
            terms = {
                tuple(rng.randint(0, 2) for _ in range(3)): rng.randint(1, p - 1)
                for _ in range(3)
            }
            gens.append(ring.from_terms(terms))
        gens = [f for f in gens if f]
        ours = groebner_basis(gens, ring).basis
        expected = sympy_groebner(gens, ring.sympy_ring)
        assert set(ours) == set(expected)
        assert is_reduced(list(ours), ring.sympy_ring)


def test_basis_is_sorted_descending(ring_of):
    ring = ring_of("x, y", 7)
    x, y = ring.gens
    basis = groebner_basis([x**2 - y, x * y - 1], ring).basis
    keys = [ring.sympy_ring.order(g.LM) for g in basis]
    assert keys == sorted(keys, reverse=True)


def test_unit_and_zero_ideals(ring_of):
    ring = ring_of("x, y", 2)
    x, y = ring.gens
    assert groebner_basis([x, x + 1], ring).is_unit
    assert groebner_basis([], ring).basis == ()
    assert buchberger([ring.zero]) == []


def test_elimination_order_eliminates_leading_variable(ring_of):
    ring = ring_of("t, x, y", 3).with_order(elimination_order(1))
    t, x, y = ring.gens
    basis = groebner_basis([t - x, t - y**2], ring).basis
    free = [g for g in basis if all(m[0] == 0 for m in g.keys())]
    assert free and all(g in (x - y**2, y**2 - x) for g in free)


def test_basis_size_budget(ring_of):
    ring = ring_of("x, y, z", 5)
    x, y, z = ring.gens
    with pytest.raises(ResourceBudgetExceeded) as info:
        groebner_basis([x**2 - y, x**3 - z], ring, Budgets(max_basis_size=2))
    assert info.value.budget == "max_basis_size"


def test_degree_budget(ring_of):
    ring = ring_of("x, y", 5)
    x, y = ring.gens
    with pytest.raises(ResourceBudgetExceeded):
        groebner_basis([x**5 - y, x * y**5 - 1], ring, Budgets(max_degree=3))


@pytest.mark.parametrize("p", [2, 3, 7])
def test_normal_form_is_idempotent(random_ideals, p):
    rng = random.Random(p)
    for I in random_ideals(p, count=5, seed=p):
        gb = groebner(I)
        for _ in range(5):
            f = I.ring.from_terms(
                {(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(1, p - 1) for _ in range(4)}
            )
            remainder = normal_form(f, gb)
            assert normal_form(remainder, gb) == remainder
            assert not normal_form(f - remainder, gb)
