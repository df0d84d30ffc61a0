"""Monte Carlo checks of the estimators' statistical properties.

Every test pins its seed; goodness-of-fit tests pass at significance 1e-3.
Run: pytest -m integration
"""

import numpy as np
import pytest
from scipy import stats

from shrink_entropy.entropy import entropy_from_spec, entropy_plugin
from shrink_entropy.frequencies import (
    estimate_bayes,
    estimate_ml,
    estimate_shrink,
    ml_variance,
    shrink_to_bayes_A,
)
from shrink_entropy.models import (
    CountVector,
    EntropyEstimatorSpec,
    FrequencyVector,
    PriorSpec,
)
from shrink_entropy.sampling import draw_counts, sample_dirichlet, substream
from shrink_entropy.shrinkage import simulate_risk

pytestmark = pytest.mark.integration

THETA = FrequencyVector(probs=[0.4, 0.3, 0.15, 0.1, 0.05])
SIGNIFICANCE = 1e-3
DRAWS = 100_000


class TestMaximumLikelihood:
    """Sampling properties of the ML estimator."""

    def test_unbiased(self):
        """Test that the mean ML estimate is within 3 standard errors of theta."""
        rng = substream(1)
        n = 20
        estimates = np.array(
            [estimate_ml(draw_counts(THETA, n, rng)).probs for _ in range(DRAWS)]
        )
        standard_errors = np.sqrt(THETA.probs * (1 - THETA.probs) / n / DRAWS)

        deviation = np.abs(estimates.mean(axis=0) - THETA.probs)

        assert np.all(deviation <= 3 * standard_errors)

    def test_variance_estimator_is_unbiased(self):
        """Test that the mean variance estimate approaches theta (1 - theta) / n."""
        rng = substream(2)
        variances = [ml_variance(draw_counts(THETA, 20, rng)) for _ in range(DRAWS)]
        expected = THETA.probs * (1 - THETA.probs) / 20

        assert np.mean(variances, axis=0) == pytest.approx(expected, rel=0.05)

    @pytest.mark.parametrize(
        "estimator", EntropyEstimatorSpec.benchmark_set(), ids=lambda e: e.name
    )
    def test_consistency(self, estimator):
        """Test convergence to the true entropy for p = 100 and n = 10^7."""
        rng = substream(3)
        theta = FrequencyVector(probs=rng.dirichlet(np.ones(100)))
        sample = draw_counts(theta, 10_000_000, rng)

        value = entropy_from_spec(sample, estimator)

        assert value == pytest.approx(entropy_plugin(theta), abs=1e-3)


class TestSamplers:
    """Goodness of fit of the random generators."""

    def test_multinomial_marginal(self):
        """Test that one cell's count follows Binomial(n, 1 / p), p = 10."""
        rng = substream(4)
        theta = FrequencyVector.uniform(10)
        first = np.array(
            [draw_counts(theta, 20, rng).counts[0] for _ in range(DRAWS)]
        )
        observed = np.append(np.bincount(first, minlength=8)[:8], np.sum(first >= 8))
        binomial = stats.binom(20, 0.1)
        expected = DRAWS * np.append(binomial.pmf(np.arange(8)), binomial.sf(7))

        result = stats.chisquare(observed, expected)

        assert result.pvalue > SIGNIFICANCE

    def test_multinomial_cells(self):
        """Test that pooled counts spread evenly over the cells of a uniform law."""
        rng = substream(4, 1)
        theta = FrequencyVector.uniform(10)
        totals = sum(draw_counts(theta, 20, rng).counts for _ in range(DRAWS))

        assert stats.chisquare(totals).pvalue > SIGNIFICANCE

    def test_dirichlet_two_cells_is_uniform(self):
        """Test that Dirichlet(1, 1) puts its first coordinate uniform on (0, 1)."""
        rng = substream(5)
        first = [sample_dirichlet(1.0, 2, rng)[0][0] for _ in range(10_000)]

        result = stats.kstest(first, stats.uniform.cdf)

        assert result.pvalue > SIGNIFICANCE

    @pytest.mark.parametrize("alpha, p", [(1.0, 5), (0.5, 4), (0.3, 3)])
    def test_dirichlet_marginal(self, alpha, p):
        """Test that a Dirichlet component follows Beta(a, (p - 1) a)."""
        rng = substream(5, p)
        first = [sample_dirichlet(alpha, p, rng)[0][0] for _ in range(10_000)]

        result = stats.kstest(first, stats.beta(alpha, (p - 1) * alpha).cdf)

        assert result.pvalue > SIGNIFICANCE


class TestShrinkageBayesEquivalence:
    """The shrinkage estimate is a Bayes estimate with a data-driven prior."""

    def test_ten_thousand_random_cases(self):
        """Test entrywise agreement within 1e-12 for random counts and intensities."""
        rng = substream(6)
        for _ in range(10_000):
            p = int(rng.integers(2, 1001))
            values = rng.integers(0, 5, size=p)
            values[0] += 1
            sample = CountVector(counts=values)
            target = FrequencyVector(probs=rng.dirichlet(np.ones(p)))
            lam = float(rng.uniform(0.0, 0.99))

            shrunk = estimate_shrink(sample, target, intensity=lam)
            mass = shrink_to_bayes_A(sample, lam)
            bayes = estimate_bayes(sample, PriorSpec.from_cells(target.probs * mass))

            assert np.max(np.abs(bayes.probs - shrunk.freqs.probs)) <= 1e-12


class TestJamesSteinDominance:
    """Risk reduction of the James-Stein estimators over ML."""

    @pytest.mark.parametrize("mu", [0.0, 1.0])
    def test_risk_margin(self, mu):
        """Test at least a 20% risk reduction for p = 10 over 10^4 draws."""
        risks = simulate_risk(p=10, mu=mu, draws=10_000, rng=substream(7))

        assert risks["ml"] == pytest.approx(10.0, rel=0.05)
        assert risks["js-zero"] <= 0.8 * risks["ml"]
        assert risks["js-mean"] <= 0.8 * risks["ml"]
