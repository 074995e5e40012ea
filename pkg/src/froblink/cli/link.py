"""Contains `froblink link` CLI implementation.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import logging
from pathlib import Path

import click

from froblink.algebra.ffpoly import format_poly
from froblink.algebra.ideal import groebner
from froblink.linkage.generic import build_generic_linkage, check_linkage

from .common import (
    PrimeType,
    budget_options,
    configure_logging,
    exit_on_error,
    load_ideal,
    make_budgets,
    verbose_option,
)

LOGGER = logging.getLogger(__name__)


@click.command()
@click.option(
    "-i",
    "--input-path",
    type=click.Path(path_type=Path, exists=True, dir_okay=False),
    help="Path to the ideal file.",
    required=True,
)
@click.option("--p", "p", type=PrimeType(), required=True, help="Characteristic.")
@budget_options
@verbose_option
@exit_on_error
def link_cli(
    input_path: Path,
    p: int,
    max_basis: int,
    max_degree: int,
    max_generators: int,
    verbose: bool,
):
    """Print the generic link of an ideal and its structural checks."""
    configure_logging(verbose)
    budgets = make_budgets(max_basis, max_degree, max_generators)
    ld = build_generic_linkage(load_ideal(input_path, p), budgets)
    click.echo(f"ring: {', '.join(ld.ring.variables)}")
    click.echo(f"height: {ld.height}")
    click.echo("L:")
    for g in ld.generators:
        click.echo(f"  {format_poly(g)}")
    click.echo("J:")
    for g in groebner(ld.linked, budgets=budgets).basis:
        click.echo(f"  {format_poly(g)}")
    checks = check_linkage(ld, budgets)
    for name, value in checks._asdict().items():
        click.echo(f"{name}: {'true' if value else 'false'}")
