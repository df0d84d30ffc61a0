"""Centralized configuration for the entropy toolkit.

This module defines the ``Settings`` class, which loads and validates the
runtime configuration shared by the estimators, the Monte Carlo benchmark
and the command-line interface.

Configuration is loaded from environment variables, a ``.env`` file in the
working directory, or an explicit flat ``KEY=value`` file passed to
:meth:`Settings.from_file`.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated, Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, NoDecode, SettingsConfigDict

from shrink_entropy.exceptions import InputFormatError

logger = logging.getLogger(__name__)

DEFAULT_N_GRID = [10, 30, 100, 300, 1000, 3000, 10000]
DEFAULT_SCENARIOS = ["dirichlet-sparse", "dirichlet-uniform", "half-zeros", "zipf"]


def _split_csv(value: Any) -> Any:
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class Settings(BaseSettings):
    """Load and validate the toolkit configuration.

    Attributes
    ----------
    log_level : str
        Logging level applied by the CLI.
    workers : int
        Worker processes for the benchmark and all-pairs MI (1 = serial).
    precision : int
        Decimal places for numeric CLI output.
    report_digits : int
        Significant digits written to report files.
    seed : int
        Default seed for every randomized command.
    dpi_epsilon : float
        Default tolerance of the data-processing-inequality pruning.
    bench_p : int
        Dimension of the simulated frequency vectors.
    bench_runs : int
        Monte Carlo runs per grid cell.
    bench_n_grid : list[int]
        Sample sizes of the benchmark grid.
    bench_scenarios : list[str]
        Scenario names evaluated by the benchmark.
    zipf_exponent : float
        Exponent of the Zipf-type scenario.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        populate_by_name=True,
    )

    log_level: str = Field(default="WARNING", alias="LOG_LEVEL")
    workers: int = Field(default=1, ge=1, alias="WORKERS")

    precision: int = Field(default=6, ge=0, le=17, alias="PRECISION")
    report_digits: int = Field(default=12, ge=1, le=17, alias="REPORT_DIGITS")

    seed: int = Field(default=20090619, ge=0, alias="SEED")
    dpi_epsilon: float = Field(default=0.0, ge=0.0, alias="DPI_EPSILON")

    bench_p: int = Field(default=1000, ge=2, alias="BENCH_P")
    bench_runs: int = Field(default=1000, ge=1, alias="BENCH_RUNS")
    bench_n_grid: Annotated[list[int], NoDecode] = Field(
        default_factory=lambda: list(DEFAULT_N_GRID), alias="BENCH_N_GRID"
    )
    bench_scenarios: Annotated[list[str], NoDecode] = Field(
        default_factory=lambda: list(DEFAULT_SCENARIOS), alias="BENCH_SCENARIOS"
    )
    zipf_exponent: float = Field(default=1.0, gt=0.0, alias="ZIPF_EXPONENT")

    @field_validator("bench_n_grid", "bench_scenarios", mode="before")
    @classmethod
    def split_lists(cls, value: Any) -> Any:
        return _split_csv(value)

    @field_validator("bench_n_grid")
    @classmethod
    def validate_n_grid(cls, value: list[int]) -> list[int]:
        if not value or any(n < 1 for n in value):
            raise ValueError("Sample sizes must be positive integers.")
        return value

    @classmethod
    def from_file(cls, path: str | Path) -> Settings:
        """Load settings from a flat ``KEY=value`` file.

        Environment variables still take precedence over the file, matching
        the dotenv semantics of ``pydantic-settings``.

        Parameters
        ----------
        path : str | Path
            Configuration file with one ``KEY=value`` pair per line.

        Returns
        -------
        Settings
            The validated settings.

        Raises
        ------
        InputFormatError
            If the file does not exist.
        """
        path = Path(path)
        if not path.is_file():
            logger.error(f"Configuration file not found: {path}")
            raise InputFormatError(str(path), "configuration file not found")
        return cls(_env_file=path)  # type: ignore[call-arg]


# Global reusable instance
settings = Settings()
