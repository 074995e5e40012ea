"""Contains `froblink sweep` CLI implementation.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from froblink.linkage.comparison import CellOptions, ComparisonReport, run_comparison
from froblink.utils import io
from froblink.utils.report import write_comparison_report

from .common import (
    EXIT_SWEEP_FAILED,
    PrimeListType,
    budget_options,
    configure_logging,
    exit_on_error,
    make_budgets,
    verbose_option,
)
from .params import RunConfig

LOGGER = logging.getLogger(__name__)


def run_sweep(config: RunConfig) -> ComparisonReport:
    """Run the comparison for ``config`` and write its reports."""
    spec = io.load_ideal_spec(config.input_path)
    report = run_comparison(
        spec,
        config.primes,
        config.e_max,
        CellOptions(config.budgets, config.fast_search, config.strong_f_pure),
        config.jobs,
    )
    write_comparison_report(report, config.output_dir, config.formats)
    return report


@click.command()
@click.option(
    "-i",
    "--input-path",
    type=click.Path(path_type=Path, exists=True, dir_okay=False),
    help="Path to the ideal file.",
    required=True,
)
@click.option(
    "--primes", type=PrimeListType(), required=True, help="Comma-separated primes, e.g. 2,3."
)
@click.option(
    "--emax",
    "e_max",
    type=click.IntRange(min=1),
    default=2,
    show_default=True,
    help="Largest level.",
)
@click.option(
    "-o",
    "--output-path",
    type=click.Path(path_type=Path, file_okay=False),
    help="Directory receiving the reports.",
    required=True,
)
@click.option(
    "--format",
    "formats",
    type=click.Choice(["csv", "md"]),
    multiple=True,
    default=("csv", "md"),
    show_default=True,
    help="Report formats to write.",
)
@click.option(
    "--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes."
)
@click.option(
    "--log-path",
    type=click.Path(path_type=Path, dir_okay=False),
    default=None,
    help="Also write the logs of the run to this file.",
)
@click.option("--fast", is_flag=True, help="Binary-search nu_bracket on monotone instances.")
@click.option(
    "--strong-f-pure", is_flag=True, help="Check F-purity with the exponent ceil(t q)."
)
@budget_options
@verbose_option
@exit_on_error
def sweep_cli(
    input_path: Path,
    primes: tuple[int, ...],
    e_max: int,
    output_path: Path,
    formats: tuple[str, ...],
    jobs: int,
    log_path: Path | None,
    fast: bool,
    strong_f_pure: bool,
    max_basis: int,
    max_degree: int,
    max_generators: int,
    verbose: bool,
):
    """Compare thresholds of an ideal and its generic link over primes and levels."""
    configure_logging(verbose, log_path)
    config = RunConfig(
        input_path=input_path,
        primes=primes,
        e_max=e_max,
        output_dir=output_path,
        formats=formats,
        budgets=make_budgets(max_basis, max_degree, max_generators),
        fast_search=fast,
        strong_f_pure=strong_f_pure,
        jobs=jobs,
    )
    report = run_sweep(config)
    if not report.ok:
        LOGGER.error("Sweep finished with failed rows or violated relations.")
        sys.exit(EXIT_SWEEP_FAILED)
    LOGGER.info("Sweep finished; all relations hold.")
