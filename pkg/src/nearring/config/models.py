"""
Configuration models for nearring.
"""
import os
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator


THREADS_ENV_VAR = "NEARRING_THREADS"
DEFAULT_THREADS = 4


def default_max_workers() -> int:
    """Worker count from NEARRING_THREADS, falling back to the default."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_THREADS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}")


class ExecutionMode(str, Enum):
    """Execution mode for parallelizable work."""
    PARALLEL = "parallel"
    SERIAL = "serial"


class OutputFormat(str, Enum):
    """Report format on stdout."""
    TEXT = "text"
    MACHINE = "machine"


class BaseConfig(BaseModel):
    """Base configuration with common fields."""
    execution_mode: ExecutionMode = ExecutionMode.PARALLEL
    max_workers: int = Field(default_factory=default_max_workers)
    output_format: OutputFormat = OutputFormat.TEXT
    log_file: Optional[Path] = None
    verbose: bool = False

    @field_validator("max_workers")
    @classmethod
    def validate_max_workers(cls, v: int) -> int:
        """Validate worker count."""
        if v < 1:
            raise ValueError("max_workers must be at least 1")
        return v

    @property
    def machine(self) -> bool:
        """Whether only machine lines should be printed."""
        return self.output_format == OutputFormat.MACHINE


class ClosureConfig(BaseConfig):
    """Configuration for closure saturation."""
    degree_cap: int = Field(default=16, ge=0)
    coeff_cap: int = 3
    combo_width: int = 3
    max_rounds: int = Field(default=12, ge=1)
    work_factor: int = 3

    @field_validator("coeff_cap")
    @classmethod
    def validate_coeff_cap(cls, v: int) -> int:
        """Validate coefficient cap."""
        if v < 1:
            raise ValueError("coeff_cap must be at least 1")
        return v

    @field_validator("combo_width")
    @classmethod
    def validate_combo_width(cls, v: int) -> int:
        """Validate combination width."""
        if v < 1:
            raise ValueError("combo_width must be at least 1")
        return v

    @field_validator("work_factor")
    @classmethod
    def validate_work_factor(cls, v: int) -> int:
        """Validate working degree multiplier."""
        if v < 1:
            raise ValueError("work_factor must be at least 1")
        return v

    @property
    def work_degree(self) -> int:
        """Largest degree kept while saturating."""
        return self.degree_cap * self.work_factor

    def escalated(self) -> "ClosureConfig":
        """Copy with doubled coefficient cap and one more combination slot."""
        return self.model_copy(
            update={"coeff_cap": self.coeff_cap * 2, "combo_width": self.combo_width + 1}
        )


class SearchConfig(BaseConfig):
    """Configuration for witness search."""
    max_depth: int = Field(default=8, ge=0)
    coeff_cap: int = Field(default=3, ge=1)
    combo_width: int = Field(default=3, ge=1)
    work_factor: int = Field(default=3, ge=1)


class CheckConfig(ClosureConfig):
    """Configuration for the acceptance check suites."""
    samples: int = Field(default=1000, ge=1)
    seed: int = 0
    j: Optional[int] = None
    escalations: int = Field(default=0, ge=0)

    @field_validator("j")
    @classmethod
    def validate_j(cls, v: Optional[int]) -> Optional[int]:
        """Validate the excluded generator index for the parity check."""
        if v is not None and v < 1:
            raise ValueError("j must be at least 1")
        return v
