"""
Closure command handler for nearring.
"""
import sys
from pathlib import Path
from typing import List, Optional

import typer

from nearring.closure.saturation import ClosureEngine
from nearring.config.loader import ConfigLoader
from nearring.config.models import ExecutionMode, OutputFormat
from nearring.utils.executor import CheckResult
from nearring.utils.logging import handle_error, setup_logging
from nearring.utils.report import ReportBuilder


def closure_command(
    basis: Optional[str] = None,
    gens: Optional[List[str]] = None,
    degree_cap: Optional[int] = None,
    coeff_cap: Optional[int] = None,
    combo_width: Optional[int] = None,
    max_rounds: Optional[int] = None,
    execution_mode: Optional[ExecutionMode] = None,
    output_format: Optional[OutputFormat] = None,
    config: Optional[Path] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> None:
    """
    Saturate a generating set and dump its coefficient lattice.

    Args:
        basis: Comma-separated subset of {1, x, x2, x3}
        gens: Generator polynomials, used instead of basis
        degree_cap: Largest reported degree
        coeff_cap: Largest weight in a right-argument combination
        combo_width: Most rows in a right-argument combination
        max_rounds: Saturation round limit
        execution_mode: Execution mode (parallel/serial)
        output_format: Report format
        config: Path to JSON config file
        log_file: Log file path
        verbose: Enable debug logging
    """
    setup_logging(log_file, verbose)

    try:
        config_data = ConfigLoader.load_closure_config(
            config_file=config,
            degree_cap=degree_cap,
            coeff_cap=coeff_cap,
            combo_width=combo_width,
            max_rounds=max_rounds,
            execution_mode=execution_mode,
            output_format=output_format,
            log_file=log_file,
            verbose=verbose,
        )
        generators = ConfigLoader.resolve_generators(basis, gens)

        report = ClosureEngine(config_data).run(generators)

        if not config_data.machine:
            typer.echo(
                f"closure of {ReportBuilder.generators(generators)}: {report.rounds} rounds, "
                f"{report.candidates} compositions",
                err=True,
            )
        for line in ReportBuilder.lattice(report.lattice):
            typer.echo(line)
        result = CheckResult(
            "closure", report.converged, detail="converged" if report.converged else "round limit"
        )
        typer.echo(result.line)
        sys.exit(0 if result.success else 1)

    except Exception as e:
        handle_error(e, "closure")
