"""Contains `froblink fpt`, `froblink lce` and `froblink tau` CLI implementation.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path

import click

from froblink.algebra.ffpoly import format_poly
from froblink.algebra.ideal import groebner
from froblink.frobenius.thresholds import fpt_estimate, lce_estimate, test_ideal
from froblink.utils import io
from froblink.utils.report import atomic_write_text, csv_text, threshold_csv

from .common import (
    FractionType,
    PrimeType,
    budget_options,
    configure_logging,
    exit_on_error,
    load_ideal,
    make_budgets,
    parse_locus,
    verbose_option,
)

LOGGER = logging.getLogger(__name__)


def _threshold_options(func):
    func = click.option(
        "-o",
        "--output-path",
        type=click.Path(path_type=Path, dir_okay=False),
        default=None,
        help="Write the CSV here instead of stdout.",
    )(func)
    func = click.option(
        "--locus",
        type=str,
        default=None,
        help="Comma-separated variables generating the maximal ideal (default: all).",
    )(func)
    func = click.option(
        "--emax",
        "e_max",
        type=click.IntRange(min=1),
        default=3,
        show_default=True,
        help="Largest level e.",
    )(func)
    func = click.option("--p", "p", type=PrimeType(), required=True, help="Characteristic.")(func)
    func = click.option(
        "-i",
        "--input-path",
        type=click.Path(path_type=Path, exists=True, dir_okay=False),
        help="Path to the ideal file.",
        required=True,
    )(func)
    return func


def _emit(text: str, output_path: Path | None) -> None:
    if output_path is None:
        click.echo(text, nl=False)
    else:
        atomic_write_text(output_path, text)
        LOGGER.info("Wrote %s", output_path)


def _ideal_id(input_path: Path) -> str:
    return io.load_ideal_spec(input_path).label or input_path.stem


@click.command()
@_threshold_options
@budget_options
@verbose_option
@exit_on_error
def fpt_cli(
    input_path: Path,
    p: int,
    e_max: int,
    locus: str | None,
    output_path: Path | None,
    max_basis: int,
    max_degree: int,
    max_generators: int,
    verbose: bool,
):
    """Print F-pure threshold bounds per level as CSV."""
    configure_logging(verbose)
    ideal = load_ideal(input_path, p)
    budgets = make_budgets(max_basis, max_degree, max_generators)
    table = fpt_estimate(
        ideal, parse_locus(ideal, locus), e_max, _ideal_id(input_path), budgets
    )
    _emit(threshold_csv([table]), output_path)


@click.command()
@_threshold_options
@click.option("--fast", is_flag=True, help="Binary-search when the lower level is monotone.")
@click.option(
    "--verify-monotone",
    is_flag=True,
    help="Scan every k so upper bounds of monotone levels are certified.",
)
@budget_options
@verbose_option
@exit_on_error
def lce_cli(
    input_path: Path,
    p: int,
    e_max: int,
    locus: str | None,
    output_path: Path | None,
    fast: bool,
    verify_monotone: bool,
    max_basis: int,
    max_degree: int,
    max_generators: int,
    verbose: bool,
):
    """Print least critical exponent estimates per level as CSV."""
    configure_logging(verbose)
    ideal = load_ideal(input_path, p)
    budgets = make_budgets(max_basis, max_degree, max_generators)
    table = lce_estimate(
        ideal,
        parse_locus(ideal, locus),
        e_max,
        _ideal_id(input_path),
        fast=fast,
        verify_monotone=verify_monotone,
        budgets=budgets,
    )
    _emit(threshold_csv([table]), output_path)


@click.command()
@click.option(
    "-i",
    "--input-path",
    type=click.Path(path_type=Path, exists=True, dir_okay=False),
    help="Path to the ideal file.",
    required=True,
)
@click.option("--p", "p", type=PrimeType(), required=True, help="Characteristic.")
@click.option("--t", "t", type=FractionType(), required=True, help="Exponent, e.g. 3/2.")
@click.option(
    "--emax",
    "e_max",
    type=click.IntRange(min=1),
    default=8,
    show_default=True,
    help="Largest level tried.",
)
@budget_options
@verbose_option
@exit_on_error
def tau_cli(
    input_path: Path,
    p: int,
    t: Fraction,
    e_max: int,
    max_basis: int,
    max_degree: int,
    max_generators: int,
    verbose: bool,
):
    """Print the generators of the test ideal tau(I^t) as CSV."""
    configure_logging(verbose)
    budgets = make_budgets(max_basis, max_degree, max_generators)
    result = test_ideal(load_ideal(input_path, p), t, e_max, budgets)
    records = [
        {
            "t": str(result.t),
            "stabilized_at_e": result.stabilized_at_e,
            "certified": "true" if result.certified else "false",
            "generator": format_poly(g),
        }
        for g in groebner(result.ideal, budgets=budgets).basis
    ]
    click.echo(
        csv_text(("t", "stabilized_at_e", "certified", "generator"), records), nl=False
    )
