"""
Compose command handler for nearring.
"""
import sys
from pathlib import Path
from typing import Optional

import typer

from nearring.algebra.polycore import compose, parse_poly
from nearring.config.loader import ConfigLoader
from nearring.utils.logging import handle_error, setup_logging
from nearring.utils.report import ReportBuilder


def compose_command(
    outer: str = "",
    inner: str = "",
    config: Optional[Path] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> None:
    """
    Print the composition outer o inner.

    Args:
        outer: Left polynomial
        inner: Right polynomial
        config: Path to JSON config file
        log_file: Log file path
        verbose: Enable debug logging
    """
    setup_logging(log_file, verbose)

    try:
        ConfigLoader.load_base_config(config_file=config, log_file=log_file, verbose=verbose)
        result = compose(parse_poly(outer), parse_poly(inner))
        for line in ReportBuilder.polynomial(result):
            typer.echo(line)
        sys.exit(0)

    except Exception as e:
        handle_error(e, "compose")
