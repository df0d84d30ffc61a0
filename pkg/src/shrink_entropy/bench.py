"""Monte Carlo comparison of entropy estimators.

For every scenario and sample size, each run draws fresh true frequencies
and fresh multinomial counts, evaluates all configured estimators on the
same counts and records squared errors against the truth. Runs use
independent random substreams keyed by (scenario, n, run), so grid cells
may be simulated in any order or in parallel without changing a number.
"""

import io
import logging
import math
import time
from multiprocessing import Pool

import numpy as np
import pandas as pd

from shrink_entropy.entropy import (
    entropy_from_spec,
    entropy_plugin,
    frequencies_from_spec,
)
from shrink_entropy.exceptions import ShrinkEntropyError
from shrink_entropy.models import (
    BenchCell,
    BenchConfig,
    BenchResult,
    CountVector,
    EntropyEstimatorSpec,
    FrequencyVector,
    ScenarioSpec,
    TruthSummary,
)
from shrink_entropy.sampling import draw_counts, draw_true_probs, substream

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["scenario", "n", "estimator", "metric", "value"]


class _Accumulator:
    """Per-estimator errors of one grid cell, in run order."""

    def __init__(self, spec: EntropyEstimatorSpec):
        self.spec = spec
        self.entropy_errors: list[float] = []
        self.freq_errors: list[float] = []
        self.failed = 0
        self.seconds = 0.0

    def evaluate(
        self, theta: FrequencyVector, h_true: float, counts: CountVector
    ) -> None:
        start = time.perf_counter()
        try:
            if self.spec.produces_frequencies:
                freqs = frequencies_from_spec(counts, self.spec)
                estimate = entropy_plugin(freqs)
                self.freq_errors.append(math.fsum((theta.probs - freqs.probs) ** 2))
            else:
                estimate = entropy_from_spec(counts, self.spec)
            self.entropy_errors.append(estimate - h_true)
        except ShrinkEntropyError as e:
            self.failed += 1
            logger.warning(f"{self.spec.name} failed on n={counts.n}: {e}")
        finally:
            self.seconds += time.perf_counter() - start

    def to_cell(self, scenario: ScenarioSpec, n: int) -> BenchCell:
        completed = len(self.entropy_errors)
        errors = np.array(self.entropy_errors)
        return BenchCell(
            scenario=scenario.kind,
            n=n,
            estimator=self.spec.name,
            freq_mse=(
                math.fsum(self.freq_errors) / completed
                if self.spec.produces_frequencies and completed
                else None
            ),
            entropy_mse=math.fsum(errors**2) / completed if completed else None,
            entropy_bias=math.fsum(errors) / completed if completed else None,
            completed_runs=completed,
            failed_runs=self.failed,
            seconds=self.seconds,
        )


def _simulate_cell(
    config: BenchConfig, scenario: ScenarioSpec, n: int
) -> tuple[list[BenchCell], TruthSummary]:
    accumulators = [_Accumulator(spec) for spec in config.estimators]
    true_entropies: list[float] = []
    clamped_total = 0
    for run in range(config.runs):
        rng = substream(config.seed, scenario.code, n, run)
        probs, clamped = draw_true_probs(scenario, rng)
        clamped_total += clamped
        theta = FrequencyVector(probs=probs)
        h_true = entropy_plugin(theta)
        true_entropies.append(h_true)
        counts = draw_counts(theta, n, rng)
        for accumulator in accumulators:
            accumulator.evaluate(theta, h_true, counts)
    if clamped_total:
        logger.warning(
            f"{scenario.kind}, n={n}: {clamped_total} Dirichlet cells underflowed to 0"
        )
    truth = TruthSummary(
        scenario=scenario.kind,
        n=n,
        true_entropy_mean=math.fsum(true_entropies) / config.runs,
        clamped_cells=clamped_total,
    )
    logger.info(f"Simulated {scenario.kind}, n={n}, runs={config.runs}")
    return [acc.to_cell(scenario, n) for acc in accumulators], truth


def run_bench(config: BenchConfig, workers: int = 1) -> BenchResult:
    """Run the full simulation grid.

    Parameters
    ----------
    config : BenchConfig
        Scenarios, sample sizes, runs, estimators and seed.
    workers : int
        Worker processes over grid cells; 1 simulates in-process.

    Returns
    -------
    BenchResult
        One cell per (scenario, n, estimator) in grid order.
    """
    grid = [(config, s, n) for s in config.scenarios for n in config.sample_sizes]
    logger.info(
        f"Benchmark: {len(grid)} grid cells x {config.runs} runs x "
        f"{len(config.estimators)} estimators, seed={config.seed}"
    )
    if workers > 1:
        with Pool(workers) as pool:
            outcomes = pool.starmap(_simulate_cell, grid)
    else:
        outcomes = [_simulate_cell(*args) for args in grid]
    cells = [cell for outcome_cells, _ in outcomes for cell in outcome_cells]
    truths = [truth for _, truth in outcomes]
    return BenchResult(config=config, cells=cells, truths=truths)


def report_frame(result: BenchResult, include_timing: bool = False) -> pd.DataFrame:
    """Long-format metrics table in grid order."""
    rows: list[tuple[str, int, str, str, float]] = []
    for cell in result.cells:
        metrics = [
            ("freq_mse", cell.freq_mse),
            ("entropy_mse", cell.entropy_mse),
            ("entropy_bias", cell.entropy_bias),
        ]
        if cell.failed_runs:
            metrics.append(("failed_runs", float(cell.failed_runs)))
        if include_timing:
            metrics.append(("seconds", cell.seconds))
        rows.extend(
            (cell.scenario, cell.n, cell.estimator, metric, value)
            for metric, value in metrics
            if value is not None
        )
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def write_report(
    result: BenchResult, digits: int = 12, include_timing: bool = False
) -> str:
    """Render the result as CSV with a ``#`` header line naming seed and RNG.

    Values carry ``digits`` significant digits. Timings are left out unless
    requested, so identical configurations give byte-identical reports.
    """
    config = result.config
    header = (
        f"# rng={result.rng_algorithm} seed={config.seed} runs={config.runs}\n"
    )
    frame = report_frame(result, include_timing)
    body: str = frame.to_csv(
        index=False, float_format=f"%.{digits}g", lineterminator="\n"
    )
    return header + body


def read_report(text: str) -> pd.DataFrame:
    """Parse a report written by :func:`write_report`."""
    return pd.read_csv(io.StringIO(text), comment="#")
