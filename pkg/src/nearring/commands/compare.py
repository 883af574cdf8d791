"""
Compare command handler for nearring.
"""
import sys
from pathlib import Path
from typing import Optional

import typer

from nearring.algebra.predicates import GeneratorBasis
from nearring.closure.saturation import compare_closure_vs_predicate
from nearring.config.loader import ConfigLoader
from nearring.config.models import ExecutionMode, OutputFormat
from nearring.utils.executor import CheckResult
from nearring.utils.logging import handle_error, setup_logging


def compare_command(
    basis: str = "",
    degree_cap: Optional[int] = None,
    coeff_cap: Optional[int] = None,
    combo_width: Optional[int] = None,
    max_rounds: Optional[int] = None,
    escalate: int = 0,
    execution_mode: Optional[ExecutionMode] = None,
    output_format: Optional[OutputFormat] = None,
    config: Optional[Path] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> None:
    """
    Compare the saturated lattice of a basis with its characterization.

    Args:
        basis: Comma-separated subset of {1, x, x2, x3}
        degree_cap: Largest compared degree
        coeff_cap: Largest weight in a right-argument combination
        combo_width: Most rows in a right-argument combination
        max_rounds: Saturation round limit
        escalate: Extra attempts with escalated caps
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

        report = compare_closure_vs_predicate(GeneratorBasis.parse(basis), config_data, escalate)

        for line in report.lines():
            typer.echo(line)
        result = CheckResult("compare", report.success, detail=report.note)
        typer.echo(result.line)
        sys.exit(0 if result.success else 1)

    except Exception as e:
        handle_error(e, "compare")
