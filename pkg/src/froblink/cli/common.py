"""Contains options, parameter types and error handling shared by the commands.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from __future__ import annotations

import functools
import logging
import sys
from fractions import Fraction
from pathlib import Path

import click

from froblink.algebra.ffpoly import PrimeField
from froblink.algebra.ideal import Ideal, variable_ideal
from froblink.algebra.params import Budgets
from froblink.errors import IdealInputError, IdealSyntaxError, ResourceBudgetExceeded
from froblink.utils import io
from froblink.utils import logging as logging_utils

LOGGER = logging.getLogger(__name__)

EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_SWEEP_FAILED = 4

DEFAULT_PRIME = 32003


class FractionType(click.ParamType):
    """Exact rational such as ``3/2`` or ``1``."""

    name = "fraction"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            result = Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)
        if result < 0:
            self.fail(f"{value!r} is negative", param, ctx)
        return result


class IntListType(click.ParamType):
    """Comma-separated list of integers such as ``2,3,5``."""

    name = "int-list"

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return tuple(value)
        try:
            return tuple(int(item) for item in str(value).split(",") if item.strip())
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)


class PrimeType(click.ParamType):
    """A prime characteristic below 2^31."""

    name = "prime"

    def convert(self, value, param, ctx):
        try:
            return PrimeField(int(value)).p
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class PrimeListType(IntListType):
    """Non-empty comma-separated list of primes such as ``2,3,5``."""

    name = "prime-list"

    def convert(self, value, param, ctx):
        primes = super().convert(value, param, ctx)
        if not primes:
            self.fail("at least one prime is required", param, ctx)
        for p in primes:
            PrimeType().convert(p, param, ctx)
        return primes


def verbose_option(func):
    return click.option("-v", "--verbose", is_flag=True, help="Activate debug logs.")(func)


def budget_options(func):
    """Add the budget options, overridable through environment variables."""
    defaults = Budgets()
    func = click.option(
        "--max-generators",
        type=click.IntRange(min=1),
        default=defaults.max_generators,
        envvar="FROBLINK_MAX_GENERATORS",
        show_default=True,
        help="Largest generator count of a Frobenius power.",
    )(func)
    func = click.option(
        "--max-degree",
        type=click.IntRange(min=1),
        default=defaults.max_degree,
        envvar="FROBLINK_MAX_DEGREE",
        show_default=True,
        help="Largest degree of a Groebner basis element.",
    )(func)
    func = click.option(
        "--max-basis",
        type=click.IntRange(min=1),
        default=defaults.max_basis_size,
        envvar="FROBLINK_MAX_BASIS",
        show_default=True,
        help="Largest Groebner basis size.",
    )(func)
    return func


def make_budgets(max_basis: int, max_degree: int, max_generators: int) -> Budgets:
    return Budgets(
        max_basis_size=max_basis, max_degree=max_degree, max_generators=max_generators
    )


def configure_logging(verbose: bool, log_path: Path | None = None) -> None:
    logging_utils.configure(logging.DEBUG if verbose else logging.INFO, log_path)


def load_ideal(path: Path, p: int) -> Ideal:
    """Read an ideal file and reduce it mod p."""
    return io.reduce_mod_p(io.load_ideal_spec(path), p)


def parse_locus(ideal: Ideal, names: str | None) -> Ideal:
    """Maximal ideal of the named variables (all variables when ``names`` is empty)."""
    if not names:
        return variable_ideal(ideal.ring)
    selected = [name.strip() for name in names.split(",") if name.strip()]
    try:
        return variable_ideal(ideal.ring, selected)
    except KeyError as exc:
        raise IdealInputError(str(exc)) from exc


def exit_on_error(func):
    """Map froblink exceptions to exit codes after logging them."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except IdealSyntaxError as exc:
            LOGGER.error("Parse error: %s", exc)
            sys.exit(EXIT_INPUT)
        except ResourceBudgetExceeded as exc:
            LOGGER.error("%s", exc)
            sys.exit(EXIT_BUDGET)
        except IdealInputError as exc:
            LOGGER.error("Invalid input: %s", exc)
            sys.exit(EXIT_INPUT)
        except Exception:
            LOGGER.exception("Internal error.")
            sys.exit(EXIT_INTERNAL)

    return wrapper
