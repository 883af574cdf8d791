"""
Configuration loader for nearring.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Type, TypeVar

from pydantic import ValidationError

from nearring.algebra.polycore import IntPoly, parse_poly
from nearring.algebra.predicates import GeneratorBasis
from nearring.config.models import BaseConfig, CheckConfig, ClosureConfig, SearchConfig
from nearring.utils.logging import ConfigurationError

T = TypeVar("T", bound=BaseConfig)


class ConfigLoader:
    """Configuration loader with JSON and CLI override support."""

    @staticmethod
    def load_json_config(config_path: Path) -> Dict[str, Any]:
        """Load configuration from JSON file."""
        if not config_path.exists():
            raise ConfigurationError(f"Config file not found: {config_path}")

        try:
            with open(config_path, "r") as f:
                config_data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in config file {config_path}: {e}")

        if not isinstance(config_data, dict):
            raise ConfigurationError(f"Config file {config_path} must hold a JSON object")
        return config_data

    @staticmethod
    def merge_config(
        config_class: Type[T],
        json_config: Optional[Dict[str, Any]] = None,
        cli_args: Optional[Dict[str, Any]] = None,
    ) -> T:
        """
        Merge JSON config with CLI arguments.
        CLI arguments override JSON config values.
        """
        merged_config: Dict[str, Any] = {}

        if json_config:
            # keys meant for other subcommands are ignored
            known = config_class.model_fields
            merged_config.update({k: v for k, v in json_config.items() if k in known})

        # Override with CLI args (exclude None values)
        if cli_args:
            cli_filtered = {k: v for k, v in cli_args.items() if v is not None}
            merged_config.update(cli_filtered)

        try:
            return config_class(**merged_config)
        except (ValidationError, ValueError) as e:
            raise ConfigurationError(f"Configuration validation failed: {e}")

    @staticmethod
    def resolve_generators(
        basis: Optional[str] = None,
        gens: Optional[List[str]] = None,
    ) -> List[IntPoly]:
        """
        Generators from either a --basis string or repeated --gen polynomials.

        Raises:
            ConfigurationError: If neither or both sources are given
        """
        if basis is None and not gens:
            raise ConfigurationError("Either --basis or --gen must be provided")
        if basis is not None and gens:
            raise ConfigurationError("Cannot specify both --basis and --gen")
        if basis is not None:
            return GeneratorBasis.parse(basis).generators()
        return [parse_poly(text) for text in gens or []]

    @classmethod
    def load_base_config(
        cls,
        config_file: Optional[Path] = None,
        **cli_args: Any,
    ) -> BaseConfig:
        """Load configuration for commands without tunables."""
        json_config = cls.load_json_config(config_file) if config_file else None
        return cls.merge_config(BaseConfig, json_config, cli_args)

    @classmethod
    def load_closure_config(
        cls,
        config_file: Optional[Path] = None,
        **cli_args: Any,
    ) -> ClosureConfig:
        """Load configuration for closure and compare commands."""
        json_config = cls.load_json_config(config_file) if config_file else None
        return cls.merge_config(ClosureConfig, json_config, cli_args)

    @classmethod
    def load_search_config(
        cls,
        config_file: Optional[Path] = None,
        **cli_args: Any,
    ) -> SearchConfig:
        """Load configuration for witness search."""
        json_config = cls.load_json_config(config_file) if config_file else None
        return cls.merge_config(SearchConfig, json_config, cli_args)

    @classmethod
    def load_check_config(
        cls,
        config_file: Optional[Path] = None,
        **cli_args: Any,
    ) -> CheckConfig:
        """Load configuration for the check suites."""
        json_config = cls.load_json_config(config_file) if config_file else None
        return cls.merge_config(CheckConfig, json_config, cli_args)
