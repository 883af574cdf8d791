"""
Member command handler for nearring.
"""
import sys
from pathlib import Path
from typing import Optional

import typer

from nearring.algebra.polycore import parse_poly
from nearring.algebra.predicates import GeneratorBasis, member
from nearring.config.loader import ConfigLoader
from nearring.config.models import OutputFormat
from nearring.utils.logging import handle_error, setup_logging
from nearring.utils.report import ReportBuilder


def member_command(
    polynomial: str = "",
    basis: str = "",
    output_format: Optional[OutputFormat] = None,
    config: Optional[Path] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> None:
    """
    Decide membership of a polynomial in the nearring generated by a basis.

    Args:
        polynomial: Polynomial text
        basis: Comma-separated subset of {1, x, x2, x3}
        output_format: Report format
        config: Path to JSON config file
        log_file: Log file path
        verbose: Enable debug logging
    """
    setup_logging(log_file, verbose)

    try:
        config_data = ConfigLoader.load_base_config(
            config_file=config, output_format=output_format, log_file=log_file, verbose=verbose
        )
        generating = GeneratorBasis.parse(basis)
        p = parse_poly(polynomial)
        verdict = member(generating, p)

        if not config_data.machine:
            typer.echo(
                f"{p} against the nearring generated by {{{generating.label}}}: "
                f"{len(verdict.violations)} violated condition(s)",
                err=True,
            )
        for line in ReportBuilder.membership(verdict):
            typer.echo(line)
        sys.exit(0 if verdict.member else 1)

    except Exception as e:
        handle_error(e, "member")
