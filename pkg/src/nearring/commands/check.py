"""
Check command handler for nearring.
"""
import sys
from pathlib import Path
from typing import Optional

from nearring.config.loader import ConfigLoader
from nearring.config.models import ExecutionMode, OutputFormat
from nearring.operations.suite import AcceptanceSuite
from nearring.utils.logging import (
    ConfigurationError,
    get_exit_code,
    handle_error,
    handle_suite_result,
    setup_logging,
)


def check_command(
    name: str = "all",
    degree_cap: Optional[int] = None,
    coeff_cap: Optional[int] = None,
    combo_width: Optional[int] = None,
    max_rounds: Optional[int] = None,
    j: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    escalate: Optional[int] = None,
    execution_mode: Optional[ExecutionMode] = None,
    output_format: Optional[OutputFormat] = None,
    config: Optional[Path] = None,
    log_file: Optional[Path] = None,
    verbose: bool = False,
) -> None:
    """
    Run one acceptance check, or all of them.

    Args:
        name: Check name, or "all"
        degree_cap: Overrides each check's default degree cap
        coeff_cap: Largest weight in a right-argument combination
        combo_width: Most rows in a right-argument combination
        max_rounds: Saturation round limit
        j: Excluded generator index for theorem-4.1
        samples: Random samples for the property checks
        seed: Random seed
        escalate: Extra attempts with escalated caps
        execution_mode: Execution mode (parallel/serial)
        output_format: Report format
        config: Path to JSON config file
        log_file: Log file path
        verbose: Enable debug logging
    """
    setup_logging(log_file, verbose)

    try:
        config_data = ConfigLoader.load_check_config(
            config_file=config,
            degree_cap=degree_cap,
            coeff_cap=coeff_cap,
            combo_width=combo_width,
            max_rounds=max_rounds,
            j=j,
            samples=samples,
            seed=seed,
            escalations=escalate,
            execution_mode=execution_mode,
            output_format=output_format,
            log_file=log_file,
            verbose=verbose,
        )

        suite = AcceptanceSuite(config_data)
        if name not in suite.names:
            raise ConfigurationError(f"Unknown check {name!r}; expected one of {suite.names}")

        summary = suite.run([name])

        handle_suite_result(summary, f"Check {name}", machine=config_data.machine)
        sys.exit(get_exit_code(summary))

    except Exception as e:
        handle_error(e, "check")
