"""Contains the prime/level sweep comparing thresholds of an ideal and its generic link.

Every cell (p, e) is computed independently from the canonical text of the input
ideal, so cells can run in worker processes. Each process memoizes the linkage
and the nu-invariants of lower levels.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import concurrent.futures
import dataclasses
import functools
import logging
from fractions import Fraction
from typing import Literal, NamedTuple, Sequence

from froblink.algebra.ffpoly import PrimeField
from froblink.algebra.params import DEFAULT_BUDGETS, Budgets
from froblink.errors import BadPrimeError, ResourceBudgetExceeded
from froblink.frobenius.thresholds import is_f_pure_level, nu_power
from froblink.linkage.generic import (
    LinkageData,
    build_generic_linkage,
    check_linkage,
    compare_lce_levelwise,
    origin_maximal_ideal,
)
from froblink.utils.io import (
    IntegerIdealSpec,
    bad_prime_bound,
    format_ideal_spec,
    parse_ideal_file,
    reduce_mod_p,
)

LOGGER = logging.getLogger(__name__)

LinkedIdeal = Literal["I", "L", "J"]


@dataclasses.dataclass(frozen=True)
class CellOptions:
    """Settings shared by all cells of a sweep."""

    budgets: Budgets = DEFAULT_BUDGETS
    # Binary-search nu_bracket when the profile one level below is monotone.
    fast: bool = False
    # Witness F-purity at the lower fpt bound with the exponent ceil(t q) instead of
    # floor(t (q - 1)).
    strong_f_pure: bool = False


class ComparisonRow(NamedTuple):
    """Estimates at one prime and level."""

    p: int
    e: int
    q: int
    nu_fpt_I: int | None = None
    nu_fpt_L: int | None = None
    nu_fpt_J: int | None = None
    nu_lce_Ic: int | None = None
    nu_lce_Lc: int | None = None
    nu_lce_Jc: int | None = None
    gap: Fraction | None = None
    chain_ok: bool = False
    lce_eq: bool = False
    # lce ordering nu(L^c) <= nu(J^c).
    lce_order_ok: bool = False
    # (c/n_S) Fpt(I) <= Fpt(J).
    mapage_ok: bool = False
    # (c/r) Fpt(I) <= Fpt(J).
    ratio_ok: bool = False
    # Fpt(I) <= Fpt(J) when r = c; None otherwise.
    complete_intersection_ok: bool | None = None
    gap_bound_ok: bool = False
    structure_ok: bool = False
    # (R, I^t) passes the F-purity test of level e at t = nu_fpt_I / q.
    f_pure_ok: bool = False
    error: str | None = None

    @property
    def failed(self) -> bool:
        return self.error is not None


@functools.lru_cache(maxsize=32)
def _linkage_for(text: str, p: int, budgets: Budgets) -> LinkageData:
    return build_generic_linkage(reduce_mod_p(parse_ideal_file(text), p), budgets)


@functools.lru_cache(maxsize=32)
def _structure_ok(text: str, p: int, budgets: Budgets) -> bool:
    return check_linkage(_linkage_for(text, p, budgets), budgets).ok


@functools.lru_cache(maxsize=256)
def _fpt_nu(text: str, p: int, which: LinkedIdeal, e: int, budgets: Budgets) -> int:
    ld = _linkage_for(text, p, budgets)
    ideal = {"I": ld.ideal, "L": ld.linking, "J": ld.linked}[which]
    window = None
    if e > 1:
        previous = _fpt_nu(text, p, which, e - 1, budgets)
        window = (p * previous, p * previous + len(ideal.gens) * (p - 1))
    return nu_power(ideal, e, origin_maximal_ideal(ideal.ring), window, budgets)


def _bounds(nu: int, generators: int, q: int) -> tuple[Fraction, Fraction]:
    return Fraction(nu, q), Fraction(nu + generators, q)


def compute_row(text: str, p: int, e: int, options: CellOptions) -> ComparisonRow:
    """Compute the cell (p, e); budget failures become an error row."""
    q = p**e
    budgets = options.budgets
    try:
        ld = _linkage_for(text, p, budgets)
        nus = {which: _fpt_nu(text, p, which, e, budgets) for which in ("I", "L", "J")}
        lce = compare_lce_levelwise(ld, e, options.fast, budgets)
        structure_ok = _structure_ok(text, p, budgets)
        f_pure_ok = is_f_pure_level(
            ld.ideal,
            Fraction(nus["I"], q),
            e,
            origin_maximal_ideal(ld.base_ring),
            options.strong_f_pure,
            budgets,
        )
    except ResourceBudgetExceeded as exc:
        LOGGER.error("Cell p=%d e=%d failed: %s", p, e, exc)
        return ComparisonRow(p, e, q, error=str(exc))

    c, r = ld.height, ld.r
    lower_I, upper_I = _bounds(nus["I"], len(ld.ideal.gens), q)
    lower_L, _ = _bounds(nus["L"], len(ld.linking.gens), q)
    _, upper_J = _bounds(nus["J"], len(ld.linked.gens), q)
    gap = max(Fraction(0), lower_I - upper_J)
    return ComparisonRow(
        p=p,
        e=e,
        q=q,
        nu_fpt_I=nus["I"],
        nu_fpt_L=nus["L"],
        nu_fpt_J=nus["J"],
        nu_lce_Ic=lce.nu_I,
        nu_lce_Lc=lce.nu_L,
        nu_lce_Jc=lce.nu_J,
        gap=gap,
        chain_ok=lower_L <= upper_I and lower_I <= upper_J + gap,
        lce_eq=lce.nu_I == lce.nu_L,
        lce_order_ok=lce.nu_L <= lce.nu_J,
        mapage_ok=Fraction(c, ld.n_S) * lower_I <= upper_J,
        ratio_ok=Fraction(c, r) * lower_I <= upper_J,
        complete_intersection_ok=(lower_I <= upper_J) if r == c else None,
        gap_bound_ok=gap <= Fraction(c * r + 2, p),
        structure_ok=structure_ok,
        f_pure_ok=f_pure_ok,
    )


def _compute_cell(args: tuple[str, int, int, CellOptions]) -> ComparisonRow:
    text, p, e, options = args
    LOGGER.info("Computing cell p=%d e=%d", p, e)
    return compute_row(text, p, e, options)


@dataclasses.dataclass
class ComparisonReport:
    """Sweep results for one ideal."""

    label: str
    variables: tuple[str, ...]
    height: int
    generators: int
    n_S: int
    bad_prime_bound: int
    primes: tuple[int, ...]
    e_max: int
    rows: list[ComparisonRow]

    @property
    def complete_rows(self) -> list[ComparisonRow]:
        return [row for row in self.rows if not row.failed]

    @property
    def chain_ok(self) -> bool:
        return all(row.chain_ok for row in self.complete_rows)

    @property
    def lce_levelwise_equal(self) -> bool:
        return all(row.lce_eq for row in self.complete_rows)

    @property
    def lce_order_ok(self) -> bool:
        return all(row.lce_order_ok for row in self.complete_rows)

    @property
    def mapage_ok(self) -> bool:
        return all(row.mapage_ok and row.ratio_ok for row in self.complete_rows) and all(
            row.complete_intersection_ok is not False for row in self.complete_rows
        )

    @property
    def gap_bound_ok(self) -> bool:
        return all(row.gap_bound_ok for row in self.complete_rows if row.e == self.e_max)

    @property
    def structure_ok(self) -> bool:
        return all(row.structure_ok for row in self.complete_rows)

    @property
    def f_pure_ok(self) -> bool:
        return all(row.f_pure_ok for row in self.complete_rows)

    @property
    def ok(self) -> bool:
        """No failed rows and every checked relation holds."""
        return (
            not any(row.failed for row in self.rows)
            and self.chain_ok
            and self.lce_levelwise_equal
            and self.lce_order_ok
            and self.mapage_ok
            and self.gap_bound_ok
            and self.structure_ok
            and self.f_pure_ok
        )

    def records(self) -> list[dict[str, object]]:
        """CSV rows in the column order of ``COMPARISON_COLUMNS``."""
        return [_row_record(row) for row in self.rows]


COMPARISON_COLUMNS = (
    "p",
    "e",
    "q",
    "nu_fpt_I",
    "nu_fpt_L",
    "nu_fpt_J",
    "nu_lce_Ic",
    "nu_lce_Lc",
    "nu_lce_Jc",
    "gap",
    "chain_ok",
    "lce_eq",
)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _row_record(row: ComparisonRow) -> dict[str, object]:
    record: dict[str, object] = {"p": row.p, "e": row.e, "q": row.q}
    for column in COMPARISON_COLUMNS[3:9]:
        value = getattr(row, column)
        record[column] = "" if value is None else value
    record["gap"] = "" if row.gap is None else str(row.gap)
    if row.failed:
        record["chain_ok"] = "error"
        record["lce_eq"] = "error"
    else:
        record["chain_ok"] = _flag(row.chain_ok)
        record["lce_eq"] = _flag(row.lce_eq)
    return record


def validate_primes(spec: IntegerIdealSpec, primes: Sequence[int]) -> int:
    """Check every prime against the bad-prime bound and return the bound."""
    bound = bad_prime_bound(spec)
    for p in primes:
        PrimeField(p)
        if p <= bound:
            raise BadPrimeError(p, f"not above the bad-prime bound {bound}")
        reduce_mod_p(spec, p)
    return bound


def run_comparison(
    spec: IntegerIdealSpec,
    primes: Sequence[int],
    e_max: int,
    options: CellOptions = CellOptions(),
    jobs: int = 1,
) -> ComparisonReport:
    """Sweep all primes and levels 1..e_max.

    Args:
        spec: The integer ideal.
        primes: Primes above the bad-prime bound.
        e_max: Largest level.
        options: Budgets and search settings.
        jobs: Number of worker processes; 1 computes in this process.

    Raises:
        BadPrimeError: if a prime is at or below the bad-prime bound.
        IdealInputError: if the ideal cannot be linked.
    """
    if e_max < 1:
        raise ValueError(f"e_max must be at least 1, got {e_max}.")
    if not primes:
        raise ValueError("At least one prime is required.")
    primes = tuple(sorted(set(primes)))
    bound = validate_primes(spec, primes)
    text = format_ideal_spec(spec)

    first = _linkage_for(text, primes[0], options.budgets)
    cells = [(text, p, e, options) for p in primes for e in range(1, e_max + 1)]
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(_compute_cell, cells))
    else:
        rows = [_compute_cell(cell) for cell in cells]
    rows.sort(key=lambda row: (row.p, row.e))

    report = ComparisonReport(
        label=spec.label or "I",
        variables=spec.variables,
        height=first.height,
        generators=first.r,
        n_S=first.n_S,
        bad_prime_bound=bound,
        primes=primes,
        e_max=e_max,
        rows=rows,
    )
    if spec.height is not None and spec.height != first.height:
        LOGGER.warning(
            "Declared height %d differs from computed height %d.", spec.height, first.height
        )
    LOGGER.warning(
        "Height %d of %s is computed as n - dim; equidimensionality is assumed, not checked.",
        first.height,
        report.label,
    )
    return report
