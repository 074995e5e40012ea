"""Command-line-interface of froblink.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

import click

from . import ideal, link, sweep, thresholds


@click.group()
def main_cli():
    """Exact Frobenius-power computations and generic-linkage experiments over F_p."""
    pass


main_cli.add_command(ideal.gb_cli, "gb")
main_cli.add_command(ideal.colon_cli, "colon")
main_cli.add_command(ideal.dim_cli, "dim")
main_cli.add_command(thresholds.fpt_cli, "fpt")
main_cli.add_command(thresholds.lce_cli, "lce")
main_cli.add_command(thresholds.tau_cli, "tau")
main_cli.add_command(link.link_cli, "link")
main_cli.add_command(sweep.sweep_cli, "sweep")
