"""Unit tests for the Monte Carlo estimator comparison."""

import pytest

from shrink_entropy.bench import read_report, report_frame, run_bench, write_report
from shrink_entropy.models import BenchConfig, EntropyEstimatorSpec, ScenarioSpec

# =============================================================================
# Fixtures
# =============================================================================


def make_config(sample_sizes=(10, 30), runs=3, seed=42, estimators=None):
    return BenchConfig(
        scenarios=[
            ScenarioSpec(kind="dirichlet-uniform", p=20),
            ScenarioSpec(kind="half-zeros", p=20),
        ],
        sample_sizes=list(sample_sizes),
        runs=runs,
        estimators=estimators or EntropyEstimatorSpec.benchmark_set(),
        seed=seed,
    )


@pytest.fixture(scope="module")
def result():
    """A small simulation grid shared by the report tests."""
    return run_bench(make_config())


# =============================================================================
# Simulation
# =============================================================================


class TestRunBench:
    """Tests for run_bench."""

    def test_one_cell_per_grid_point_and_estimator(self, result):
        """Test the grid order of the cells."""
        assert len(result.cells) == 2 * 2 * 8
        first = result.cells[0]
        assert (first.scenario, first.n, first.estimator) == (
            "dirichlet-uniform",
            10,
            "ml",
        )
        assert len(result.truths) == 4

    def test_metrics(self, result):
        """Test which metrics each estimator reports."""
        shrink = result.cell("half-zeros", 30, "shrink")
        chao_shen = result.cell("half-zeros", 30, "chao-shen")

        assert shrink.completed_runs == 3
        assert shrink.freq_mse is not None and shrink.freq_mse >= 0.0
        assert chao_shen.freq_mse is None
        assert chao_shen.entropy_mse >= chao_shen.entropy_bias**2 - 1e-12

    def test_true_entropy_below_log_p(self, result):
        """Test that the recorded true entropies are plausible."""
        for truth in result.truths:
            assert 0.0 < truth.true_entropy_mean < 3.0

    def test_deterministic(self, result):
        """Test that the same configuration reproduces every number."""
        again = run_bench(make_config())

        assert write_report(again) == write_report(result)

    def test_seed_changes_results(self, result):
        """Test that a different seed draws different data."""
        other = run_bench(make_config(seed=43))

        assert write_report(other) != write_report(result)

    def test_cells_are_independent_of_grid(self, result):
        """Test that a cell does not depend on the other cells simulated."""
        alone = run_bench(make_config(sample_sizes=(30,)))

        assert alone.cell("half-zeros", 30, "ml").entropy_mse == result.cell(
            "half-zeros", 30, "ml"
        ).entropy_mse

    def test_failed_runs_are_counted(self):
        """Test that an estimator failing on every run is reported, not fatal."""
        specs = [EntropyEstimatorSpec.parse(name) for name in ("ml", "shrink")]

        outcome = run_bench(make_config(sample_sizes=(1,), estimators=specs))

        shrink = outcome.cell("dirichlet-uniform", 1, "shrink")
        assert shrink.completed_runs == 0
        assert shrink.failed_runs == 3
        assert shrink.entropy_mse is None
        assert outcome.cell("dirichlet-uniform", 1, "ml").completed_runs == 3

    def test_missing_cell_raises_key_error(self, result):
        """Test the lookup of a cell outside the grid."""
        with pytest.raises(KeyError):
            result.cell("zipf", 10, "ml")


# =============================================================================
# Report
# =============================================================================


class TestReport:
    """Tests for the CSV report."""

    def test_header_line(self, result):
        """Test that the report names the generator and the seed."""
        first = write_report(result).splitlines()[0]

        assert first == "# rng=numpy.PCG64/SeedSequence seed=42 runs=3"

    def test_long_format(self, result):
        """Test the columns and the metrics present."""
        frame = read_report(write_report(result))

        assert list(frame.columns) == ["scenario", "n", "estimator", "metric", "value"]
        metrics = set(frame["metric"])
        assert metrics == {"freq_mse", "entropy_mse", "entropy_bias"}
        ml = frame[(frame.estimator == "ml") & (frame.metric == "entropy_mse")]
        assert len(ml) == 4

    def test_chao_shen_has_no_frequency_error(self, result):
        """Test that estimators without frequencies omit freq_mse."""
        frame = report_frame(result)
        rows = frame[frame.estimator == "chao-shen"]

        assert "freq_mse" not in set(rows["metric"])

    def test_timings_only_on_request(self, result):
        """Test that wall-clock seconds are excluded by default."""
        assert "seconds" not in write_report(result)
        assert "seconds" in write_report(result, include_timing=True)

    def test_significant_digits(self, result):
        """Test that values are written with the requested precision."""
        frame = read_report(write_report(result, digits=12))
        cell = result.cell("dirichlet-uniform", 10, "ml")
        row = frame[
            (frame.scenario == "dirichlet-uniform")
            & (frame.n == 10)
            & (frame.estimator == "ml")
            & (frame.metric == "entropy_mse")
        ]

        assert row["value"].iloc[0] == pytest.approx(cell.entropy_mse, rel=1e-11)
