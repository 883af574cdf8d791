"""
Main CLI entry point for nearring.
"""
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import click
import typer

from nearring.commands.check import check_command
from nearring.commands.closure import closure_command
from nearring.commands.compare import compare_command
from nearring.commands.compose import compose_command
from nearring.commands.member import member_command
from nearring.commands.verify import verify_command
from nearring.commands.witness import witness_command
from nearring.config.models import ExecutionMode, OutputFormat

app = typer.Typer(
    name="nearring",
    help="Exact arithmetic and membership checks for the composition nearring of integer polynomials",
    no_args_is_help=True,
)


@app.command()
def member(
    polynomial: str = typer.Argument(..., help="Polynomial, e.g. \"2x^10\""),
    basis: str = typer.Option(..., "--basis", "-b", help="Comma-separated subset of 1,x,x2,x3"),
    output_format: Optional[OutputFormat] = typer.Option(
        None, "--format", help="Report format"
    ),
    config: Optional[Path] = typer.Option(None, "--config", "-f", help="Path to JSON config file"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", "-l", help="Log file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Decide membership in the nearring generated by a basis."""
    member_command(
        polynomial=polynomial,
        basis=basis,
        output_format=output_format,
        config=config,
        log_file=log_file,
        verbose=verbose,
    )


@app.command()
def compose(
    outer: str = typer.Argument(..., help="Left polynomial"),
    inner: str = typer.Argument(..., help="Right polynomial"),
    config: Optional[Path] = typer.Option(None, "--config", "-f", help="Path to JSON config file"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", "-l", help="Log file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Compose two polynomials."""
    compose_command(
        outer=outer,
        inner=inner,
        config=config,
        log_file=log_file,
        verbose=verbose,
    )


@app.command()
def closure(
    basis: Optional[str] = typer.Option(
        None, "--basis", "-b", help="Comma-separated subset of 1,x,x2,x3"
    ),
    gens: Optional[List[str]] = typer.Option(
        None, "--gen", "-g", help="Generator polynomial (repeatable)"
    ),
    degree_cap: Optional[int] = typer.Option(None, "--degree-cap", "-d", help="Largest degree"),
    coeff_cap: Optional[int] = typer.Option(None, "--coeff-cap", help="Largest combination weight"),
    combo_width: Optional[int] = typer.Option(
        None, "--combo-width", help="Most rows per combination"
    ),
    max_rounds: Optional[int] = typer.Option(None, "--max-rounds", help="Saturation round limit"),
    execution_mode: Optional[ExecutionMode] = typer.Option(
        None, "--execution-mode", "-e", help="Execution mode"
    ),
    output_format: Optional[OutputFormat] = typer.Option(
        None, "--format", help="Report format"
    ),
    config: Optional[Path] = typer.Option(None, "--config", "-f", help="Path to JSON config file"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", "-l", help="Log file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Saturate generators and dump the coefficient lattice."""
    closure_command(
        basis=basis,
        gens=gens,
        degree_cap=degree_cap,
        coeff_cap=coeff_cap,
        combo_width=combo_width,
        max_rounds=max_rounds,
        execution_mode=execution_mode,
        output_format=output_format,
        config=config,
        log_file=log_file,
        verbose=verbose,
    )


@app.command()
def compare(
    basis: str = typer.Option(..., "--basis", "-b", help="Comma-separated subset of 1,x,x2,x3"),
    degree_cap: Optional[int] = typer.Option(None, "--degree-cap", "-d", help="Largest degree"),
    coeff_cap: Optional[int] = typer.Option(None, "--coeff-cap", help="Largest combination weight"),
    combo_width: Optional[int] = typer.Option(
        None, "--combo-width", help="Most rows per combination"
    ),
    max_rounds: Optional[int] = typer.Option(None, "--max-rounds", help="Saturation round limit"),
    escalate: int = typer.Option(0, "--escalate", help="Extra attempts with escalated caps"),
    execution_mode: Optional[ExecutionMode] = typer.Option(
        None, "--execution-mode", "-e", help="Execution mode"
    ),
    output_format: Optional[OutputFormat] = typer.Option(
        None, "--format", help="Report format"
    ),
    config: Optional[Path] = typer.Option(None, "--config", "-f", help="Path to JSON config file"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", "-l", help="Log file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Compare the saturated lattice of a basis with its characterization."""
    compare_command(
        basis=basis,
        degree_cap=degree_cap,
        coeff_cap=coeff_cap,
        combo_width=combo_width,
        max_rounds=max_rounds,
        escalate=escalate,
        execution_mode=execution_mode,
        output_format=output_format,
        config=config,
        log_file=log_file,
        verbose=verbose,
    )


@app.command()
def witness(
    target: str = typer.Argument(..., help="Polynomial to derive"),
    basis: Optional[str] = typer.Option(
        None, "--basis", "-b", help="Comma-separated subset of 1,x,x2,x3"
    ),
    gens: Optional[List[str]] = typer.Option(
        None, "--gen", "-g", help="Generator polynomial (repeatable)"
    ),
    depth: Optional[int] = typer.Option(
        None, "--depth", "--max-rounds", help="Most composition rounds"
    ),
    coeff_cap: Optional[int] = typer.Option(None, "--coeff-cap", help="Largest combination weight"),
    combo_width: Optional[int] = typer.Option(
        None, "--combo-width", help="Most rows per combination"
    ),
    execution_mode: Optional[ExecutionMode] = typer.Option(
        None, "--execution-mode", "-e", help="Execution mode"
    ),
    output_format: Optional[OutputFormat] = typer.Option(
        None, "--format", help="Report format"
    ),
    config: Optional[Path] = typer.Option(None, "--config", "-f", help="Path to JSON config file"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", "-l", help="Log file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Search for a derivation term of a polynomial."""
    witness_command(
        target=target,
        basis=basis,
        gens=gens,
        depth=depth,
        coeff_cap=coeff_cap,
        combo_width=combo_width,
        execution_mode=execution_mode,
        output_format=output_format,
        config=config,
        log_file=log_file,
        verbose=verbose,
    )


@app.command()
def verify(
    term: Optional[str] = typer.Argument(None, help="S-expression term"),
    claimed: Optional[str] = typer.Argument(None, help="Claimed value"),
    basis: Optional[str] = typer.Option(
        None, "--basis", "-b", help="Comma-separated subset of 1,x,x2,x3"
    ),
    gens: Optional[List[str]] = typer.Option(
        None, "--gen", "-g", help="Generator polynomial (repeatable)"
    ),
    identity: bool = typer.Option(False, "--identity", help="Bind the id leaf to x"),
    builtin: Optional[str] = typer.Option(None, "--builtin", help="Built-in derivation name"),
    output_format: Optional[OutputFormat] = typer.Option(
        None, "--format", help="Report format"
    ),
    config: Optional[Path] = typer.Option(None, "--config", "-f", help="Path to JSON config file"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", "-l", help="Log file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Verify a derivation term, a built-in derivation, or all built-ins."""
    verify_command(
        term=term,
        claimed=claimed,
        basis=basis,
        gens=gens,
        identity=identity,
        builtin=builtin,
        output_format=output_format,
        config=config,
        log_file=log_file,
        verbose=verbose,
    )


@app.command()
def check(
    name: str = typer.Argument("all", help="Check name, or all"),
    degree_cap: Optional[int] = typer.Option(
        None, "--degree-cap", "-d", help="Override each check's degree cap"
    ),
    coeff_cap: Optional[int] = typer.Option(None, "--coeff-cap", help="Largest combination weight"),
    combo_width: Optional[int] = typer.Option(
        None, "--combo-width", help="Most rows per combination"
    ),
    max_rounds: Optional[int] = typer.Option(None, "--max-rounds", help="Saturation round limit"),
    j: Optional[int] = typer.Option(None, "--j", help="Excluded index for theorem-4.1"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Random samples per property"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed"),
    escalate: Optional[int] = typer.Option(
        None, "--escalate", help="Extra attempts with escalated caps"
    ),
    execution_mode: Optional[ExecutionMode] = typer.Option(
        None, "--execution-mode", "-e", help="Execution mode"
    ),
    output_format: Optional[OutputFormat] = typer.Option(
        None, "--format", help="Report format"
    ),
    config: Optional[Path] = typer.Option(None, "--config", "-f", help="Path to JSON config file"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", "-l", help="Log file path"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Run an acceptance check suite."""
    check_command(
        name=name,
        degree_cap=degree_cap,
        coeff_cap=coeff_cap,
        combo_width=combo_width,
        max_rounds=max_rounds,
        j=j,
        samples=samples,
        seed=seed,
        escalate=escalate,
        execution_mode=execution_mode,
        output_format=output_format,
        config=config,
        log_file=log_file,
        verbose=verbose,
    )


def run_command(argv: Sequence[str]) -> int:
    """
    Run the CLI on argv and return the exit status instead of exiting.

    Args:
        argv: Arguments after the program name

    Returns:
        0 on pass, 1 on fail, 2 on usage errors, 3 on unexpected errors
    """
    command = typer.main.get_command(app)
    try:
        result = command.main(args=list(argv), prog_name="nearring", standalone_mode=False)
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    except click.ClickException as e:
        e.show(file=sys.stderr)
        return e.exit_code
    except click.exceptions.Abort:
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    app()
