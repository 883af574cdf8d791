"""
Verify command handler for nearring.
"""
import sys
from functools import partial
from pathlib import Path
from typing import List, Optional

import typer

from nearring.algebra.polycore import parse_poly
from nearring.config.loader import ConfigLoader
from nearring.config.models import OutputFormat
from nearring.utils.executor import CheckResult, ParallelMapper
from nearring.utils.logging import (
    ConfigurationError,
    get_exit_code,
    handle_error,
    handle_suite_result,
    setup_logging,
)
from nearring.utils.report import ReportBuilder
from nearring.witness.fixtures import builtin_derivations, derivation_by_name
from nearring.witness.terms import Derivation, Environment, eval_term, parse_term, verify_derivation


def verify_command(
    term: Optional[str] = None,
    claimed: Optional[str] = None,
    basis: Optional[str] = None,
    gens: Optional[List[str]] = None,
    identity: bool = False,
    builtin: Optional[str] = None,
    output_format: Optional[OutputFormat] = None,
    config: Optional[Path] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> None:
    """
    Verify a derivation term against its claimed value.

    With neither a term nor --builtin, every built-in derivation is verified.

    Args:
        term: S-expression term text
        claimed: Claimed value as polynomial text
        basis: Comma-separated subset of {1, x, x2, x3}
        gens: Generator polynomials, used instead of basis
        identity: Bind the id leaf to the polynomial x
        builtin: Name of a built-in derivation
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

        if builtin is not None:
            try:
                d = derivation_by_name(builtin)
            except KeyError as e:
                raise ConfigurationError(e.args[0])
        elif term is not None:
            if claimed is None:
                raise ConfigurationError("A claimed value is required with a term")
            environment = Environment(
                tuple(ConfigLoader.resolve_generators(basis, gens)), has_identity=identity
            )
            d = Derivation("cli", parse_term(term), environment, parse_poly(claimed))
        else:
            checks = [(fixture.name, partial(_verify_check, fixture)) for fixture in builtin_derivations()]
            summary = ParallelMapper(config_data).run_checks(checks)
            handle_suite_result(summary, "Verification", machine=config_data.machine)
            sys.exit(get_exit_code(summary))

        value = eval_term(d.term, d.environment)
        ok = value == d.claimed_value
        for line in ReportBuilder.verification(d.name, value, ok):
            typer.echo(line)
        sys.exit(0 if ok else 1)

    except Exception as e:
        handle_error(e, "verify")


def _verify_check(d: Derivation) -> CheckResult:
    return CheckResult(d.name, verify_derivation(d))
