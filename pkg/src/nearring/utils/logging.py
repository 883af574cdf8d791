"""
Logging and error handling utilities for nearring.
"""
import logging
import sys
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from nearring.utils.executor import SuiteSummary


def setup_logging(log_file: Optional[Path] = None, verbose: bool = False) -> None:
    """
    Set up logging configuration.

    Args:
        log_file: Optional log file path
        verbose: Enable verbose logging
    """
    level = logging.DEBUG if verbose else logging.INFO

    file_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    # stdout is reserved for report lines
    console_handler = RichHandler(console=Console(stderr=True), rich_tracebacks=True)
    console_handler.setLevel(level)
    root_logger.addHandler(console_handler)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(file_formatter)
        root_logger.addHandler(file_handler)


def format_suite_summary(summary: SuiteSummary, show_details: bool = True) -> str:
    """
    Format a check-suite summary as a rich table.

    Args:
        summary: SuiteSummary to format
        show_details: Whether to list every check below the table

    Returns:
        Formatted summary string
    """
    console = Console(file=sys.stderr, force_terminal=False)

    table = Table(title="Check Summary")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")

    table.add_row("Total Checks", str(summary.total_checks))
    table.add_row("Passed", str(summary.passed_checks))
    table.add_row("Failed", str(summary.failed_checks))
    table.add_row("Overall Success", "✓" if summary.overall_success else "✗")

    with console.capture() as capture:
        console.print(table)

    output = capture.get()

    if show_details and summary.results:
        output += "\nDetailed Results:\n"
        for result in summary.results:
            status = "✓" if result.success else "✗"
            output += f"  {status} {result.name}"
            if result.error:
                output += f" - Error: {result.error}"
            elif result.detail:
                output += f" - {result.detail}"
            output += "\n"

    return output


def handle_suite_result(
    summary: SuiteSummary,
    operation_name: str,
    machine: bool = False,
) -> None:
    """
    Print the per-check RESULT lines and, in text mode, the summary table.

    Args:
        summary: SuiteSummary from the run
        operation_name: Name of the operation for logging
        machine: Print only the line-oriented results
    """
    logger = logging.getLogger(__name__)

    for result in summary.results:
        for line in result.report:
            typer.echo(line)
        typer.echo(result.line)

    if not machine:
        typer.echo(format_suite_summary(summary), err=True)

    if summary.overall_success:
        logger.info(f"{operation_name} passed all {summary.total_checks} checks")
    else:
        logger.warning(
            f"{operation_name} failed {summary.failed_checks} out of {summary.total_checks} checks"
        )
        for result in summary.results:
            if not result.success:
                logger.error(f"{operation_name}: {result.name} failed: {result.error or result.detail}")


def get_exit_code(summary: SuiteSummary) -> int:
    """
    Get the exit code for a suite run.

    Returns:
        0 when every check passed, 1 otherwise
    """
    return 0 if summary.overall_success else 1


class NearringError(Exception):
    """Base exception for nearring operations."""
    pass


class ConfigurationError(NearringError):
    """Configuration validation error."""
    pass


class PolynomialSyntaxError(NearringError):
    """Polynomial text does not match the grammar."""

    GRAMMAR_HINT = (
        "expected poly := term (('+'|'-') term)*, term := [integer] ['x' ['^' natural]], "
        'e.g. "2x^10", "-3x^3+1", "0"'
    )

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(message)
        self.text = text
        self.position = position


class TermSyntaxError(NearringError):
    """Derivation term text is not a valid s-expression term."""
    pass


class InfeasibleConfigError(NearringError):
    """No generator fits the configured degree cap."""
    pass


class UnresolvedLabelError(NearringError):
    """A generator leaf references a label outside the environment."""
    pass


class IllFormedTermError(NearringError):
    """A term uses a leaf the operation does not accept."""
    pass


class LemmaViolation(NearringError):
    """A number-theoretic checker found a counterexample."""
    pass


class InvariantError(NearringError):
    """An arithmetic invariant the characterizations rely on does not hold."""
    pass


def describe_error(error: BaseException) -> str:
    """The error message, or the exception type when the message is empty."""
    return str(error) or type(error).__name__


USAGE_ERRORS = (
    ConfigurationError,
    PolynomialSyntaxError,
    TermSyntaxError,
    InfeasibleConfigError,
    UnresolvedLabelError,
    IllFormedTermError,
)


def handle_error(error: Exception, operation: str) -> None:
    """
    Handle and log errors appropriately.

    Args:
        error: Exception that occurred
        operation: Operation being performed when error occurred
    """
    logger = logging.getLogger(__name__)
    message = describe_error(error)

    if isinstance(error, PolynomialSyntaxError):
        logger.error(f"Syntax error in {operation}: {message}")
        typer.echo(f"Syntax error: {message}", err=True)
        typer.echo(f"  {error.text}", err=True)
        typer.echo(f"  {' ' * error.position}^", err=True)
        typer.echo(f"Hint: {PolynomialSyntaxError.GRAMMAR_HINT}", err=True)
        sys.exit(2)
    elif isinstance(error, USAGE_ERRORS):
        logger.error(f"Usage error in {operation}: {message}")
        typer.echo(f"Usage error: {message}", err=True)
        sys.exit(2)
    else:
        logger.error(f"Unexpected error in {operation}: {message}")
        typer.echo(f"Unexpected error: {message}", err=True)
        sys.exit(3)
