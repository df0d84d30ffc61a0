from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .estimators import EntropyEstimatorSpec

ScenarioKind = Literal["dirichlet-sparse", "dirichlet-uniform", "half-zeros", "zipf"]

SCENARIO_ORDER: tuple[ScenarioKind, ...] = (
    "dirichlet-sparse",
    "dirichlet-uniform",
    "half-zeros",
    "zipf",
)

RNG_ALGORITHM = "numpy.PCG64/SeedSequence"


class ScenarioSpec(BaseModel):
    """How the true cell frequencies of a simulation run are generated.

    Parameters
    ----------
    kind : str
        ``dirichlet-sparse`` (a = 0.0007), ``dirichlet-uniform`` (a = 1),
        ``half-zeros`` (a = 1 on the first p/2 cells) or ``zipf``.
    p : int
        Dimension.
    exponent : float
        Zipf exponent ``s``; ignored by the Dirichlet scenarios.
    """

    model_config = ConfigDict(frozen=True)

    kind: ScenarioKind
    p: int = Field(..., ge=2)
    exponent: float = Field(default=1.0, gt=0.0)

    @model_validator(mode="after")
    def validate_even_p(self) -> ScenarioSpec:
        if self.kind == "half-zeros" and self.p % 2:
            raise ValueError("The half-zeros scenario requires an even p.")
        return self

    @property
    def dirichlet_alpha(self) -> float | None:
        return {
            "dirichlet-sparse": 0.0007,
            "dirichlet-uniform": 1.0,
            "half-zeros": 1.0,
        }.get(self.kind)

    @property
    def code(self) -> int:
        """Stable integer used to derive random substreams."""
        return SCENARIO_ORDER.index(self.kind)


class BenchConfig(BaseModel):
    """A full simulation grid.

    Parameters
    ----------
    scenarios : list[ScenarioSpec]
        Scenarios to simulate.
    sample_sizes : list[int]
        Sample sizes ``n`` of the grid.
    runs : int
        Monte Carlo runs per (scenario, n) cell.
    estimators : list[EntropyEstimatorSpec]
        Estimators evaluated on identical counts.
    seed : int
        Root seed; fully determines every random draw.
    """

    model_config = ConfigDict(frozen=True)

    scenarios: List[ScenarioSpec] = Field(..., min_length=1)
    sample_sizes: List[int] = Field(..., min_length=1)
    runs: int = Field(..., ge=1)
    estimators: List[EntropyEstimatorSpec]
    seed: int = Field(..., ge=0, lt=2**64)

    @model_validator(mode="after")
    def validate_sample_sizes(self) -> BenchConfig:
        if any(n < 1 for n in self.sample_sizes):
            raise ValueError("Sample sizes must be positive.")
        return self


class BenchCell(BaseModel):
    """Aggregated metrics of one estimator on one grid cell.

    ``freq_mse`` is ``None`` for estimators without a frequency vector; all
    metrics are ``None`` when every run failed.
    ``seconds`` is the wall-clock total and is excluded from equality checks
    of reports.
    """

    model_config = ConfigDict(frozen=True)

    scenario: ScenarioKind
    n: int
    estimator: str
    freq_mse: Optional[float] = None
    entropy_mse: Optional[float] = Field(default=None, ge=0.0)
    entropy_bias: Optional[float] = None
    completed_runs: int = Field(..., ge=0)
    failed_runs: int = Field(default=0, ge=0)
    seconds: float = Field(default=0.0, ge=0.0)


class TruthSummary(BaseModel):
    """True-entropy summary of one grid cell."""

    model_config = ConfigDict(frozen=True)

    scenario: ScenarioKind
    n: int
    true_entropy_mean: float
    clamped_cells: int = 0


class BenchResult(BaseModel):
    """Outcome of :func:`shrink_entropy.bench.run_bench`."""

    model_config = ConfigDict(frozen=True)

    config: BenchConfig
    cells: List[BenchCell]
    truths: List[TruthSummary]
    rng_algorithm: str = RNG_ALGORITHM

    def cell(self, scenario: str, n: int, estimator: str) -> BenchCell:
        for cell in self.cells:
            if (cell.scenario, cell.n, cell.estimator) == (scenario, n, estimator):
                return cell
        raise KeyError((scenario, n, estimator))
