"""Tests for F-threshold estimates, test ideals and the inequality checks."""

from __future__ import annotations

from fractions import Fraction

import pytest

from froblink.algebra.ffpoly import poly_in_bracket_max
from froblink.algebra.ideal import ideal_equal, ideal_height, is_unit, variable_ideal
from froblink.algebra.params import Budgets
from froblink.errors import IdealInputError, ResourceBudgetExceeded
from froblink.frobenius import thresholds
from froblink.frobenius.powers import nu_bracket
from froblink.frobenius.thresholds import (
    check_fpt_scaling,
    check_height_power_cap,
    element_lce_check,
    fpt_estimate,
    htw_gap_check,
    is_f_pure_level,
    is_strongly_f_regular,
    lce_estimate,
    nu_power,
    skoda_check,
)


def _principal_nu_by_expansion(f, q: int) -> int:
    """Largest r with f^r outside the bracket power, by expanding every power."""
    nu = 0
    power = f.ring.one
    for r in range(1, 2 * q):
        power = power * f
        if poly_in_bracket_max(power, q):
            break
        nu = r
    return nu


@pytest.mark.parametrize(
    "p,e,expected",
    [(2, 1, 0), (2, 2, 1), (2, 3, 3), (7, 1, 5), (7, 2, 40)],
)
def test_nu_power_of_cusp(ideal_of, p, e, expected):
    I = ideal_of("x^2 + y^3", p)
    assert nu_power(I, e, variable_ideal(I.ring)) == expected
    assert _principal_nu_by_expansion(I.gens[0], p**e) == expected


@pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_nu_power_of_maximal_and_coordinate_ideals(ideal_of, p, e):
    q = p**e
    m = variable_ideal(ideal_of("x", p).ring)
    assert nu_power(ideal_of("x, y", p), e, m) == 2 * (q - 1)
    assert nu_power(ideal_of("x", p), e, m) == q - 1


def test_nu_power_rejects_ideal_outside_locus(ideal_of):
    I = ideal_of("x + 1", 3)
    with pytest.raises(IdealInputError):
        nu_power(I, 1, variable_ideal(I.ring))


def test_nu_power_at_other_locus(ideal_of):
    # Only the variable x is in the locus, so y is a unit there.
    I = ideal_of("x*y^5", 3)
    m = variable_ideal(I.ring, ["x"])
    assert nu_power(I, 2, m) == 8


def test_fpt_table_of_maximal_ideal(ideal_of):
    I = ideal_of("x, y", 2)
    table = fpt_estimate(I, variable_ideal(I.ring), 3, "max")
    assert [row.nu for row in table.rows] == [2, 6, 14]
    for row in table.rows:
        assert row.lower <= 2 <= row.upper
        assert row.certified
    record = table.records()[0]
    assert record == {
        "ideal_id": "max",
        "kind": "fpt",
        "p": 2,
        "e": 1,
        "q": 2,
        "nu": 2,
        "lower": "1",
        "upper": "2",
        "certified": "true",
    }


def test_fpt_bounds_nest_across_levels(ideal_of):
    I = ideal_of("x^2 + y^3", 7)
    rows = fpt_estimate(I, variable_ideal(I.ring), 2).rows
    assert rows[0].lower <= rows[1].lower
    assert rows[1].upper <= rows[0].upper
    assert rows[1].lower == Fraction(40, 49)


@pytest.mark.parametrize("p,e_max", [(2, 2), (3, 2), (5, 1)])
def test_windowed_search_agrees_with_full_search(random_ideals, p, e_max):
    for I in random_ideals(p, seed=p):
        m = variable_ideal(I.ring)
        table = fpt_estimate(I, m, e_max)
        assert [row.nu for row in table.rows] == [nu_power(I, e, m) for e in range(1, e_max + 1)]


@pytest.mark.parametrize("p", [2, 3])
def test_nu_power_is_supermultiplicative(random_ideals, p):
    for I in random_ideals(p, seed=10 + p):
        m = variable_ideal(I.ring)
        assert nu_power(I, 2, m) >= p * nu_power(I, 1, m)


@pytest.mark.parametrize("p,e_max", [(2, 2), (3, 2), (5, 1)])
def test_lce_never_exceeds_fpt(random_ideals, p, e_max):
    for I in random_ideals(p, count=7, seed=20 + p):
        m = variable_ideal(I.ring)
        for e in range(1, e_max + 1):
            assert nu_bracket(I, e, m) <= nu_power(I, e, m)


def test_lce_table_with_monotone_verification(ideal_of):
    I = ideal_of("x, y", 2)
    table = lce_estimate(I, variable_ideal(I.ring), 2, verify_monotone=True)
    assert [row.nu for row in table.rows] == [1, 3]
    assert all(row.certified for row in table.rows)
    assert not table.flagged
    unverified = lce_estimate(I, variable_ideal(I.ring), 2)
    assert not any(row.certified for row in unverified.rows)


def test_lce_table_flags_ideal_outside_locus(ideal_of):
    I = ideal_of("x + 1", 2)
    table = lce_estimate(I, variable_ideal(I.ring), 1)
    assert table.flagged
    assert table.rows[0].nu == 1


def test_test_ideal_of_principal_ideal(ideal_of):
    I = ideal_of("x", 2)
    result = thresholds.test_ideal(I, Fraction(1))
    assert result.certified
    assert result.stabilized_at_e == 1
    assert ideal_equal(result.ideal, I)
    assert is_unit(thresholds.test_ideal(I, Fraction(1, 2)).ideal)


def test_test_ideal_of_maximal_ideal_at_three_halves(ideal_of):
    result = thresholds.test_ideal(ideal_of("x, y", 2), Fraction(3, 2))
    assert result.certified
    assert result.stabilized_at_e == 2
    assert is_unit(result.ideal)


def test_test_ideal_rejects_negative_exponent(ideal_of):
    with pytest.raises(ValueError):
        thresholds.test_ideal(ideal_of("x", 2), Fraction(-1))


def test_strong_f_regularity(ideal_of):
    assert is_strongly_f_regular(ideal_of("x, y", 2), Fraction(3, 2)) == (True, True)
    assert is_strongly_f_regular(ideal_of("x", 2), Fraction(1)) == (False, True)


def test_f_pure_levels(ideal_of):
    cusp = ideal_of("x^2 + y^3", 2)
    m = variable_ideal(cusp.ring)
    assert not is_f_pure_level(cusp, Fraction(1), 2, m)
    line = ideal_of("x", 2)
    assert is_f_pure_level(line, Fraction(1), 2, m)
    assert not is_f_pure_level(line, Fraction(1), 2, m, strong=True)
    assert is_f_pure_level(line, Fraction(0), 2, m)


def test_fpt_scaling_and_height_cap(ideal_of):
    I = ideal_of("x, y", 2)
    m = variable_ideal(I.ring)
    assert check_fpt_scaling(I, 2, 2, m)
    assert check_fpt_scaling(ideal_of("x^2 + y^3", 2), 3, 3, m)
    assert check_height_power_cap(I, 2, 2, m)
    assert check_height_power_cap(ideal_of("x", 2), 1, 3, m)


def test_skoda(ideal_of):
    assert skoda_check(ideal_of("x, y", 2), 2) == (True, True)
    contained, _ = skoda_check(ideal_of("x^2, y^3", 3), 2, e_max=3)
    assert contained
    with pytest.raises(ValueError):
        skoda_check(ideal_of("x, y", 2), 1)


def test_gap_check(ideal_of):
    I = ideal_of("x, y", 3)
    m = variable_ideal(I.ring)
    full = htw_gap_check(I, 1, m)
    assert not full.applicable
    assert full.holds

    monomial = ideal_of("x^2, y^3", 2)
    check = htw_gap_check(monomial, 2, variable_ideal(monomial.ring))
    assert check.applicable
    assert check.gap == Fraction(1, 4)
    assert check.bound == Fraction(3, 2)
    assert check.holds


def test_element_lce_check(ideal_of):
    I = ideal_of("x, y", 2)
    x, _ = I.ring.gens
    m = variable_ideal(I.ring)
    assert element_lce_check(x, I, 1, m)
    assert element_lce_check(x**2 + I.ring.gens[1] ** 3, I, 2, m)


@pytest.mark.parametrize(
    "p,variables,e,seed",
    [(2, "x, y, z", 2, 1), (3, "x, y", 2, 2), (5, "x, y", 1, 3)],
)
@pytest.mark.parametrize("n", [2, 3])
def test_fpt_scaling_on_random_ideals(random_ideals, p, variables, e, seed, n):
    for I in random_ideals(p, count=7, seed=seed, variables=variables, max_degree=2):
        assert check_fpt_scaling(I, n, e, variable_ideal(I.ring))


@pytest.mark.parametrize("p,e_max", [(2, 3), (3, 2)])
def test_fpt_and_lce_agree_for_principal_ideals(random_ideals, p, e_max):
    for i, I in enumerate(random_ideals(p, count=10, seed=7, max_gens=1)):
        m = variable_ideal(I.ring)
        fpt = fpt_estimate(I, m, e_max, f"f{i}")
        lce = lce_estimate(I, m, e_max, f"f{i}")
        assert [row.nu for row in fpt.rows] == [row.nu for row in lce.rows]


@pytest.mark.parametrize("gens", ["x, y", "x^2, y^3", "x^2 + y^3", "x*y"])
def test_skoda_at_generator_count(ideal_of, gens):
    I = ideal_of(gens, 2)
    assert skoda_check(I, len(I.gens)) == (True, True)


@pytest.mark.parametrize("gens", ["x", "x, y", "x^2 + y^3", "x^2, x*y, y^2"])
@pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_height_power_cap_at_computed_height(ideal_of, gens, p, e):
    I = ideal_of(gens, p)
    assert check_height_power_cap(I, ideal_height(I), e, variable_ideal(I.ring))


@pytest.mark.parametrize("p,e_max", [(2, 3), (3, 2)])
def test_fpt_bounds_tighten_across_levels(random_ideals, p, e_max):
    for I in random_ideals(p, seed=80 + p, max_degree=2):
        rows = fpt_estimate(I, variable_ideal(I.ring), e_max).rows
        for before, after in zip(rows, rows[1:]):
            assert before.lower <= after.lower
            assert after.upper <= before.upper
        assert max(row.lower for row in rows) <= min(row.upper for row in rows)


@pytest.mark.parametrize("p,e_max", [(2, 3), (3, 2)])
def test_lce_nu_is_supermultiplicative(random_ideals, p, e_max):
    for I in random_ideals(p, seed=90 + p, max_degree=2):
        rows = lce_estimate(I, variable_ideal(I.ring), e_max).rows
        for before, after in zip(rows, rows[1:]):
            assert after.nu >= p * before.nu
            assert before.lower <= after.lower


@pytest.mark.parametrize("p,e_max,max_degree", [(2, 2, 2), (3, 1, 2)])
def test_skoda_containment_on_random_ideals(random_ideals, p, e_max, max_degree):
    for I in random_ideals(p, count=5, seed=100 + p, max_degree=max_degree, max_gens=2):
        contained, _ = skoda_check(I, len(I.gens), e_max)
        assert contained


def test_test_ideal_respects_generator_budget(ideal_of):
    maximal = ideal_of("x, y, z", 3, "x, y, z")
    with pytest.raises(ResourceBudgetExceeded):
        thresholds.test_ideal(maximal, Fraction(5, 2), 3, Budgets(max_generators=50))
