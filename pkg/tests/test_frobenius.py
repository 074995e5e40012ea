"""Tests for Frobenius powers, roots and the bracket nu-invariant."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from froblink.algebra.ideal import (
    Ideal,
    ideal_contains,
    ideal_equal,
    ideal_power,
    ideal_product,
    is_unit,
    variable_ideal,
)
from froblink.algebra.params import Budgets
from froblink.errors import ResourceBudgetExceeded
from froblink.frobenius.powers import (
    RealPowerRequest,
    bracket_power,
    bracket_profile,
    ceil_scaled,
    floor_scaled,
    frobenius_digits,
    frobenius_root,
    generalized_power,
    is_monotone_profile,
    nu_bracket,
    rational_power,
    real_power,
)
from froblink.frobenius.thresholds import nu_power


def test_frobenius_digits():
    assert frobenius_digits(5, 2).digits == (1, 0, 1)
    assert frobenius_digits(8, 3).digits == (2, 2)
    assert frobenius_digits(0, 7).digits == ()
    with pytest.raises(ValueError):
        frobenius_digits(-1, 2)


def test_scaled_rounding_is_exact():
    t = Fraction(3, 7)
    assert ceil_scaled(t, 7) == 3
    assert ceil_scaled(t, 8) == 4
    assert floor_scaled(t, 8) == 3
    assert floor_scaled(Fraction(0), 5) == 0


@pytest.mark.parametrize(
    "gens,p,e,expected",
    [
        ("x^3*y^5", 2, 1, "x*y^2"),
        ("x^2 + y^2", 2, 1, "x + y"),
        ("x", 2, 1, "1"),
        ("x^9 + y^9", 3, 2, "x + y"),
        ("x^4*y + y^8", 2, 2, "x, y^2"),
    ],
)
def test_frobenius_root_examples(ideal_of, gens, p, e, expected):
    assert ideal_equal(frobenius_root(ideal_of(gens, p), e), ideal_of(expected, p))


@pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (3, 1), (5, 1)])
def test_root_is_smallest_ideal_whose_bracket_contains(ideal_of, p, e):
    # Monomial ideals: removing any generator of the root must lose containment.
    I = ideal_of("x^5*y, x^2*y^3, y^7, x^3*y^2", p)
    root = frobenius_root(I, e)
    assert ideal_contains(bracket_power(root, e), I)
    for skipped in range(len(root.gens)):
        smaller = Ideal(I.ring, [g for i, g in enumerate(root.gens) if i != skipped])
        if smaller.is_zero:
            continue
        assert not ideal_contains(bracket_power(smaller, e), I)


@pytest.mark.parametrize("e", [1, 2, 3])
def test_root_of_monomial_ideals_is_minimal(ring_of, e):
    # Shrinking any minimal generator g of the root to (g x, g y) loses containment.
    rng = random.Random(e)
    ring = ring_of("x, y", 2)
    x, y = ring.gens
    for _ in range(10):
        monomials = []
        for _ in range(rng.randint(1, 4)):
            a = rng.randint(0, 8)
            monomials.append(x**a * y ** rng.randint(0, 8 - a))
        I = Ideal(ring, monomials)
        root = frobenius_root(I, e)
        assert ideal_contains(bracket_power(root, e), I)
        for i, g in enumerate(root.gens):
            others = [h for j, h in enumerate(root.gens) if j != i]
            shrunk = Ideal(ring, [*others, g * x, g * y])
            assert not ideal_contains(bracket_power(shrunk, e), I)


@pytest.mark.parametrize("p", [2, 3])
def test_root_of_bracket_power_recovers_ideal(ideal_of, p):
    I = ideal_of("x^2 + y^3, x*y - y^2", p)
    assert ideal_equal(frobenius_root(bracket_power(I, 1), 1), I)
    assert ideal_contains(bracket_power(frobenius_root(I, 1), 1), I)


def test_generalized_power_example(ideal_of):
    power = generalized_power(ideal_of("x, y", 2), 3)
    assert ideal_equal(power, ideal_of("x^3, x^2*y, x*y^2, y^3", 2))


def test_generalized_power_special_exponents(ideal_of):
    I = ideal_of("x^2 + y, x*y", 5)
    assert is_unit(generalized_power(I, 0))
    assert ideal_equal(generalized_power(I, 3), ideal_power(I, 3))
    assert ideal_equal(generalized_power(I, 5), bracket_power(I, 1))


@pytest.mark.parametrize("p,k", [(2, 3), (2, 5), (3, 4), (3, 7)])
def test_generalized_power_inside_ordinary_power(ideal_of, p, k):
    I = ideal_of("x^2, x*y + y^3", p)
    assert ideal_contains(ideal_power(I, k), generalized_power(I, k))


def test_generalized_power_generator_budget(ideal_of):
    I = ideal_of("x, y, x + y^2", 3)
    with pytest.raises(ResourceBudgetExceeded):
        generalized_power(I, 8, Budgets(max_generators=10))


def test_rational_power_example(ideal_of):
    assert ideal_equal(rational_power(ideal_of("x, y", 2), 3, 1), ideal_of("x, y", 2))


def test_powers_of_unit_and_principal_ideals(ideal_of):
    assert is_unit(bracket_power(ideal_of("x + 1, x", 5), 2))
    assert ideal_equal(rational_power(ideal_of("x", 2), 2, 1), ideal_of("x", 2))
    assert ideal_equal(rational_power(ideal_of("x", 3), 2, 1), ideal_of("1", 3))


@pytest.mark.parametrize(
    "t,expected",
    [(Fraction(1, 2), "1"), (Fraction(1), "x"), (Fraction(3, 2), "x")],
)
def test_real_power_of_principal_ideal(ideal_of, t, expected):
    result = real_power(ideal_of("x", 2), RealPowerRequest(t))
    assert result.certified
    assert ideal_equal(result.ideal, ideal_of(expected, 2))


def test_real_power_of_maximal_ideal(ideal_of):
    result = real_power(ideal_of("x, y", 2), RealPowerRequest(Fraction(3, 2)))
    assert result.certified
    assert ideal_equal(result.ideal, ideal_of("x, y", 2))


def test_real_power_request_validation():
    with pytest.raises(ValueError):
        RealPowerRequest(Fraction(-1, 2))
    with pytest.raises(ValueError):
        RealPowerRequest(Fraction(1), k_max=0)
    assert RealPowerRequest(1).t == Fraction(1)


@pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_nu_bracket_of_maximal_and_coordinate_ideals(ideal_of, p, e):
    q = p**e
    for gens in ("x, y", "x"):
        I = ideal_of(gens, p)
        assert nu_bracket(I, e, variable_ideal(I.ring)) == q - 1


@pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)])
def test_nu_bracket_of_principal_ideal_equals_nu_power(ideal_of, p, e):
    I = ideal_of("x^2 + y^3", p)
    m = variable_ideal(I.ring)
    assert nu_bracket(I, e, m) == nu_power(I, e, m)


def test_nu_bracket_of_monomial_ideal(ideal_of):
    # (x^2, y^3)^{[k]} at q = 4: only k = 1 survives, x^2 or y^3.
    I = ideal_of("x^2, y^3", 2)
    assert nu_bracket(I, 2, variable_ideal(I.ring)) == 1


@pytest.mark.parametrize("gens", ["x, y", "x^2, y^3", "x^2 + y^3"])
def test_fast_mode_agrees_with_scan(ideal_of, gens):
    I = ideal_of(gens, 2)
    m = variable_ideal(I.ring)
    for e in (2, 3):
        assert nu_bracket(I, e, m, fast=True) == nu_bracket(I, e, m)


def test_bracket_profile(ideal_of):
    I = ideal_of("x, y", 3)
    profile = bracket_profile(I, 1, variable_ideal(I.ring))
    assert profile == (True, True, True)
    assert is_monotone_profile(profile)
    assert not is_monotone_profile((True, False, True))


def test_nu_bracket_outside_locus_returns_cap(ideal_of):
    I = ideal_of("x + 1", 3)
    assert nu_bracket(I, 2, variable_ideal(I.ring)) == 8


@pytest.mark.parametrize("p,k", [(2, 3), (2, 6), (3, 4), (3, 5)])
def test_generalized_power_is_monotone_in_the_ideal(random_ideals, p, k):
    for ideal in random_ideals(p, count=4, seed=60 + p, max_degree=2):
        ring = ideal.ring
        smaller = [
            Ideal(ring, ideal.gens[:1]),
            ideal_product(ideal, variable_ideal(ring)),
        ]
        power = generalized_power(ideal, k)
        for sub in smaller:
            assert ideal_contains(power, generalized_power(sub, k))


@pytest.mark.parametrize("p,k", [(2, 3), (2, 7), (3, 4), (5, 6)])
def test_generalized_power_of_principal_ideal_is_ordinary_power(random_ideals, p, k):
    for ideal in random_ideals(p, count=4, seed=70 + p, max_gens=1):
        f = ideal.gens[0]
        expected = Ideal(ideal.ring, [f**k])
        assert ideal_equal(generalized_power(ideal, k), expected)


@pytest.mark.parametrize(
    "gens,p,k,e",
    [
        ("x^2 + y^3", 2, 3, 1),
        ("x^2 + y^3", 2, 5, 2),
        ("x, y^2", 2, 3, 2),
        ("x^2, x*y, y^3", 3, 4, 1),
    ],
)
def test_real_power_at_rational_exponent(ideal_of, gens, p, k, e):
    ideal = ideal_of(gens, p)
    result = real_power(ideal, RealPowerRequest(Fraction(k, p**e), k_max=e + 2, s=2))
    assert result.certified
    assert ideal_equal(result.ideal, rational_power(ideal, k, e))
