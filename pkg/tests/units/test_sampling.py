"""Unit tests for random frequency and count generation."""

import numpy as np
import pytest

from shrink_entropy.exceptions import InvalidInputError
from shrink_entropy.models import FrequencyVector, ScenarioSpec
from shrink_entropy.sampling import (
    draw_counts,
    draw_true_freqs,
    draw_true_probs,
    sample_dirichlet,
    substream,
    zipf_frequencies,
)


class TestSubstream:
    """Tests for keyed random substreams."""

    def test_same_keys_same_draws(self):
        """Test that a substream is fully determined by seed and keys."""
        first = substream(42, 1, 10, 3).random(5)
        second = substream(42, 1, 10, 3).random(5)

        assert first.tolist() == second.tolist()

    def test_different_keys_different_draws(self):
        """Test that runs get independent streams."""
        assert substream(42, 1, 10, 3).random() != substream(42, 1, 10, 4).random()


class TestDirichlet:
    """Tests for the symmetric Dirichlet sampler."""

    @pytest.mark.parametrize("alpha", [1.0, 0.5, 0.0007])
    def test_simplex(self, alpha, rng):
        """Test that draws lie on the simplex for every shape."""
        probs, clamped = sample_dirichlet(alpha, 1000, rng)

        assert probs.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.all(probs >= 0.0)
        assert clamped == int(np.count_nonzero(probs == 0.0))

    def test_tiny_shape_is_concentrated(self, rng):
        """Test that a = 0.0007 puts almost all mass on a few cells."""
        probs, _ = sample_dirichlet(0.0007, 1000, rng)

        assert np.sort(probs)[-10:].sum() > 0.9


class TestScenarios:
    """Tests for the true-frequency scenarios."""

    def test_zipf(self):
        """Test theta_k proportional to 1 / k."""
        assert zipf_frequencies(3, 1.0) == pytest.approx([6 / 11, 3 / 11, 2 / 11])

    def test_zipf_scenario_is_deterministic(self, rng):
        """Test that the power law does not consume randomness."""
        probs, clamped = draw_true_probs(ScenarioSpec(kind="zipf", p=3), rng)

        assert probs == pytest.approx([6 / 11, 3 / 11, 2 / 11])
        assert clamped == 0

    def test_half_zeros(self, rng):
        """Test that the second half of the cells are structural zeros."""
        theta = draw_true_freqs(ScenarioSpec(kind="half-zeros", p=10), rng)

        assert np.all(theta.probs[5:] == 0.0)
        assert np.all(theta.probs[:5] > 0.0)

    def test_dirichlet_uniform(self, rng):
        """Test that the flat Dirichlet draw is a valid frequency vector."""
        theta = draw_true_freqs(ScenarioSpec(kind="dirichlet-uniform", p=50), rng)

        assert theta.p == 50


class TestDrawCounts:
    """Tests for multinomial sampling."""

    def test_total(self, rng):
        """Test that the counts sum to n."""
        sample = draw_counts(FrequencyVector.uniform(10), 37, rng)

        assert sample.n == 37
        assert sample.p == 10

    def test_structural_zeros_stay_empty(self, rng):
        """Test that zero-probability cells get no counts."""
        theta = FrequencyVector(probs=[0.5, 0.5, 0.0])

        assert draw_counts(theta, 100, rng).counts[2] == 0

    def test_zero_sample_size_raises_error(self, rng):
        """Test that n must be positive."""
        with pytest.raises(InvalidInputError):
            draw_counts(FrequencyVector.uniform(2), 0, rng)
