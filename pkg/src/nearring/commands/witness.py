"""
Witness command handler for nearring.
"""
import sys
from pathlib import Path
from typing import List, Optional

import typer

from nearring.algebra.polycore import parse_poly
from nearring.config.loader import ConfigLoader
from nearring.config.models import ExecutionMode, OutputFormat
from nearring.utils.logging import handle_error, setup_logging
from nearring.utils.report import ReportBuilder
from nearring.witness.search import WitnessSearch
from nearring.witness.terms import expanded_size


def witness_command(
    target: str = "",
    basis: Optional[str] = None,
    gens: Optional[List[str]] = None,
    depth: Optional[int] = None,
    coeff_cap: Optional[int] = None,
    combo_width: Optional[int] = None,
    execution_mode: Optional[ExecutionMode] = None,
    output_format: Optional[OutputFormat] = None,
    config: Optional[Path] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> None:
    """
    Search for a derivation term of target over the generators.

    Args:
        target: Polynomial to derive
        basis: Comma-separated subset of {1, x, x2, x3}
        gens: Generator polynomials, used instead of basis
        depth: Most composition rounds
        coeff_cap: Largest weight in a right-argument combination
        combo_width: Most rows in a right-argument combination
        execution_mode: Execution mode (parallel/serial)
        output_format: Report format
        config: Path to JSON config file
        log_file: Log file path
        verbose: Enable debug logging
    """
    setup_logging(log_file, verbose)

    try:
        config_data = ConfigLoader.load_search_config(
            config_file=config,
            max_depth=depth,
            coeff_cap=coeff_cap,
            combo_width=combo_width,
            execution_mode=execution_mode,
            output_format=output_format,
            log_file=log_file,
            verbose=verbose,
        )
        generators = ConfigLoader.resolve_generators(basis, gens)
        polynomial = parse_poly(target)

        search = WitnessSearch.for_target(polynomial, generators, config_data)
        term = search.find(polynomial)

        if not config_data.machine:
            over = ReportBuilder.generators(generators)
            if term is None:
                summary = f"no witness for {polynomial} over {over} within depth {search.depth}"
            else:
                summary = (
                    f"witness for {polynomial} over {over} at depth {search.depth}, "
                    f"{expanded_size(term)} nodes expanded"
                )
            typer.echo(summary, err=True)
        for line in ReportBuilder.witness(term):
            typer.echo(line)
        sys.exit(0 if term is not None else 1)

    except Exception as e:
        handle_error(e, "witness")
