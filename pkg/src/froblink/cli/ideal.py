"""Contains `froblink gb`, `froblink colon` and `froblink dim` CLI implementation.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import logging
from pathlib import Path

import click

from froblink.algebra.ffpoly import GREVLEX, LEX, format_poly
from froblink.algebra.ideal import groebner, ideal_colon, ideal_dimension

from .common import (
    DEFAULT_PRIME,
    PrimeType,
    budget_options,
    configure_logging,
    exit_on_error,
    load_ideal,
    make_budgets,
    verbose_option,
)

LOGGER = logging.getLogger(__name__)

_ORDERS = {"grevlex": GREVLEX, "lex": LEX}


def _prime_option(func):
    return click.option(
        "--p",
        "p",
        type=PrimeType(),
        default=DEFAULT_PRIME,
        show_default=True,
        help="Characteristic of the coefficient field.",
    )(func)


def _input_option(func):
    return click.option(
        "-i",
        "--input-path",
        type=click.Path(path_type=Path, exists=True, dir_okay=False),
        help="Path to the ideal file.",
        required=True,
    )(func)


@click.command()
@_input_option
@_prime_option
@click.option(
    "--order",
    type=click.Choice(sorted(_ORDERS)),
    default="grevlex",
    show_default=True,
    help="Monomial order of the basis.",
)
@budget_options
@verbose_option
@exit_on_error
def gb_cli(
    input_path: Path,
    p: int,
    order: str,
    max_basis: int,
    max_degree: int,
    max_generators: int,
    verbose: bool,
):
    """Print the reduced Groebner basis of an ideal, one element per line."""
    configure_logging(verbose)
    ideal = load_ideal(input_path, p)
    budgets = make_budgets(max_basis, max_degree, max_generators)
    for g in groebner(ideal, _ORDERS[order], budgets).basis:
        click.echo(format_poly(g))


@click.command()
@click.option(
    "--ideal",
    "ideal_path",
    type=click.Path(path_type=Path, exists=True, dir_okay=False),
    help="Path to the ideal I of (I : J).",
    required=True,
)
@click.option(
    "--by",
    "by_path",
    type=click.Path(path_type=Path, exists=True, dir_okay=False),
    help="Path to the ideal J of (I : J).",
    required=True,
)
@_prime_option
@budget_options
@verbose_option
@exit_on_error
def colon_cli(
    ideal_path: Path,
    by_path: Path,
    p: int,
    max_basis: int,
    max_degree: int,
    max_generators: int,
    verbose: bool,
):
    """Print the generators of the colon ideal (I : J)."""
    configure_logging(verbose)
    budgets = make_budgets(max_basis, max_degree, max_generators)
    colon = ideal_colon(load_ideal(ideal_path, p), load_ideal(by_path, p), budgets)
    for g in groebner(colon, budgets=budgets).basis:
        click.echo(format_poly(g))


@click.command()
@_input_option
@_prime_option
@budget_options
@verbose_option
@exit_on_error
def dim_cli(
    input_path: Path,
    p: int,
    max_basis: int,
    max_degree: int,
    max_generators: int,
    verbose: bool,
):
    """Print the Krull dimension of R/I (-1 for the unit ideal)."""
    configure_logging(verbose)
    budgets = make_budgets(max_basis, max_degree, max_generators)
    click.echo(str(ideal_dimension(load_ideal(input_path, p), budgets)))
