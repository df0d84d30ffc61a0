"""Unit tests for discretization and mutual information."""

import math
from itertools import combinations

import numpy as np
import pytest

from shrink_entropy import mutual_info
from shrink_entropy.exceptions import (
    DegenerateDataError,
    InvalidInputError,
    NumericDomainError,
    UnsupportedEstimatorError,
)
from shrink_entropy.models import (
    ContingencyTable,
    DiscretizationScheme,
    EntropyEstimatorSpec,
    ExpressionMatrix,
    FrequencyVector,
)
from shrink_entropy.mutual_info import (
    discretize,
    equal_width_scheme,
    fd_bin_count,
    fd_bin_width,
    fd_scheme,
    gaussian_mi,
    kl_divergence,
    mi_all_pairs,
    mi_from_table,
    mi_from_table_kl,
    pair_table,
    table_entropies,
)

ML = EntropyEstimatorSpec.parse("ml")
SHRINK = EntropyEstimatorSpec.parse("shrink")

# =============================================================================
# Discretization
# =============================================================================


class TestFreedmanDiaconis:
    """Tests for the Freedman-Diaconis rule."""

    def test_bin_width(self):
        """Test 2 IQR N^(-1/3) on 1..1000."""
        values = np.arange(1, 1001)

        assert fd_bin_width(values) == pytest.approx(99.9)

    def test_bin_count(self):
        """Test that a span of exactly ten widths gives ten levels."""
        assert fd_bin_count(np.arange(1, 1001)) == 10

    def test_at_least_two_levels(self):
        """Test that a narrow span still yields two levels."""
        values = np.concatenate([np.zeros(50), np.ones(50)])

        assert fd_bin_count(values) >= 2

    def test_zero_iqr_raises_error(self):
        """Test that constant data has no bin width."""
        with pytest.raises(DegenerateDataError):
            fd_bin_count(np.full(20, 3.0))

    def test_pools_all_variables(self):
        """Test that the rule sees every measurement of the matrix."""
        values = np.arange(1, 1001).reshape(10, 100)

        assert fd_scheme(values).levels == 10


class TestDiscretize:
    """Tests for equal-width schemes and binning."""

    def test_equal_width_edges(self):
        """Test K + 1 evenly spaced edges over the pooled range."""
        scheme = equal_width_scheme([[0.0, 4.0], [1.0, 2.0]], 4)

        assert scheme.edges.tolist() == [0.0, 1.0, 2.0, 3.0, 4.0]

    def test_right_open_bins_and_closed_last_bin(self):
        """Test bin membership at the edges."""
        scheme = DiscretizationScheme(edges=[0.0, 1.0, 2.0, 3.0, 4.0])
        matrix = ExpressionMatrix(
            labels=("a", "b"), values=[[0, 1, 2, 3, 4], [0.5, 1.5, 2.5, 3.5, 3.9]]
        )

        assert discretize(matrix, scheme).tolist() == [
            [0, 1, 2, 3, 3],
            [0, 1, 2, 3, 3],
        ]

    def test_out_of_range_values_are_clamped(self):
        """Test that values outside the scheme land in the boundary bins."""
        scheme = DiscretizationScheme(edges=[0.0, 1.0, 2.0])
        matrix = ExpressionMatrix(labels=("a", "b"), values=[[-5, 9], [0.5, 1.5]])

        assert discretize(matrix, scheme).tolist() == [[0, 1], [0, 1]]

    def test_single_level_raises_error(self):
        """Test that K must be at least two."""
        with pytest.raises(InvalidInputError):
            equal_width_scheme([0.0, 1.0, 2.0], 1)

    def test_constant_values_raise_error(self):
        """Test that a zero range cannot be split into bins."""
        with pytest.raises(DegenerateDataError):
            equal_width_scheme([1.0, 1.0, 1.0], 3)


class TestPairTable:
    """Tests for joint counting of two discretized rows."""

    def test_counts(self):
        """Test cell (x, y) counts."""
        table = pair_table(np.array([0, 0, 1, 1]), np.array([0, 1, 1, 1]), 2)

        assert table.counts.tolist() == [[1, 1], [0, 2]]
        assert table.n == 4

    def test_length_mismatch_raises_error(self):
        """Test that both rows must have the same length."""
        with pytest.raises(InvalidInputError):
            pair_table(np.array([0, 1]), np.array([0, 1, 1]), 2)

    def test_level_out_of_range_raises_error(self):
        """Test that levels must lie in [0, K)."""
        with pytest.raises(InvalidInputError):
            pair_table(np.array([0, 2]), np.array([0, 1]), 2)


# =============================================================================
# Mutual information
# =============================================================================


class TestMiFromTable:
    """Tests for mutual information of a contingency table."""

    def test_perfect_dependence_under_ml(self):
        """Test MI = log 2 for a diagonal table."""
        table = ContingencyTable(counts=[[2, 0], [0, 2]])

        assert mi_from_table(table, ML) == pytest.approx(math.log(2))

    def test_shrinkage_golden_value(self):
        """Test the diagonal table under shrinkage with intensity 2/3."""
        table = ContingencyTable(counts=[[2, 0], [0, 2]])
        expected = 2 * math.log(2) - (2 / 3 * math.log(3) + 1 / 3 * math.log(6))

        value = mi_from_table(table, SHRINK)

        assert value == pytest.approx(expected, abs=1e-12)
        assert 0.0 < value < math.log(2)

    def test_independent_table_under_ml(self):
        """Test that a rank-one table gives zero MI."""
        table = ContingencyTable(counts=np.outer([1, 2, 3], [2, 1, 1]))

        assert mi_from_table(table, ML) == pytest.approx(0.0, abs=1e-12)

    def test_transpose_symmetry_is_exact(self, rng):
        """Test that swapping X and Y does not change a single bit."""
        table = ContingencyTable(counts=rng.integers(0, 5, size=(6, 6)))

        for estimator in (ML, SHRINK, EntropyEstimatorSpec.parse("bayes-perks")):
            assert mi_from_table(table, estimator) == mi_from_table(
                table.transpose(), estimator
            )

    @pytest.mark.parametrize("name", ["ml", "shrink", "bayes-jeffreys"])
    def test_decomposition_is_nonnegative(self, rng, name):
        """Test H(X) + H(Y) - H(X, Y) >= -1e-12 before any clamping."""
        estimator = EntropyEstimatorSpec.parse(name)
        for _ in range(200):
            levels = int(rng.integers(2, 8))
            counts = rng.integers(0, 3, size=(levels, levels)) + np.eye(levels)
            table = ContingencyTable(counts=counts)

            h_x, h_y, h_xy = table_entropies(table, estimator)

            assert h_x + h_y - h_xy >= -1e-12
            assert mi_from_table(table, estimator) >= 0.0

    def test_kl_form_agrees(self, rng):
        """Test that the divergence form equals the entropy decomposition."""
        table = ContingencyTable(counts=rng.integers(0, 8, size=(5, 5)))

        assert mi_from_table_kl(table, SHRINK) == pytest.approx(
            mi_from_table(table, SHRINK), abs=1e-12
        )

    @pytest.mark.parametrize("name", ["miller-madow", "chao-shen"])
    def test_count_corrections_are_unsupported(self, name):
        """Test that estimators without frequencies cannot give MI."""
        table = ContingencyTable(counts=[[2, 0], [0, 2]])

        with pytest.raises(UnsupportedEstimatorError):
            mi_from_table(table, EntropyEstimatorSpec.parse(name))


class TestKlDivergence:
    """Tests for the Kullback-Leibler divergence."""

    def test_self_divergence_is_zero(self):
        """Test D(p || p) = 0."""
        p = FrequencyVector(probs=[0.2, 0.3, 0.5])

        assert kl_divergence(p, p) == 0.0

    def test_outside_support_is_infinite(self):
        """Test that mass where q is zero gives an infinite divergence."""
        p = FrequencyVector.uniform(2)
        q = FrequencyVector(probs=[1.0, 0.0])

        assert kl_divergence(p, q) == math.inf

    def test_dimension_mismatch_raises_error(self):
        """Test that both distributions must have the same cells."""
        with pytest.raises(InvalidInputError):
            kl_divergence(FrequencyVector.uniform(2), FrequencyVector.uniform(3))


class TestGaussianMi:
    """Tests for the bivariate normal reference."""

    def test_golden_value(self):
        """Test -log(1 - 0.64) / 2."""
        assert gaussian_mi(0.8) == pytest.approx(0.510826, abs=1e-6)

    def test_symmetric_in_rho(self):
        """Test that only rho^2 matters."""
        assert gaussian_mi(-0.8) == gaussian_mi(0.8)
        assert gaussian_mi(0.0) == 0.0

    @pytest.mark.parametrize("rho", [1.0, -1.0, 1.5])
    def test_outside_domain_raises_error(self, rho):
        """Test that |rho| >= 1 is outside the domain."""
        with pytest.raises(NumericDomainError):
            gaussian_mi(rho)


class TestMiAllPairs:
    """Tests for the all-pairs MI matrix."""

    @pytest.fixture
    def matrix(self, rng):
        values = rng.normal(size=(4, 30))
        values[1] = values[0]
        return ExpressionMatrix(labels=("g0", "g1", "g2", "g3"), values=values)

    def test_one_value_per_pair(self, matrix):
        """Test that the graph is complete with G (G - 1) / 2 edges."""
        graph = mi_all_pairs(matrix, fd_scheme(matrix.values), SHRINK)

        assert graph.labels == matrix.labels
        assert int(np.triu(graph.mask, 1).sum()) == 6
        assert np.array_equal(graph.weights, graph.weights.T)
        assert np.all(np.diag(graph.weights) == 0.0)

    def test_values_match_pair_tables(self, matrix):
        """Test each weight against a directly computed table."""
        scheme = equal_width_scheme(matrix.values, 4)
        discrete = discretize(matrix, scheme)

        graph = mi_all_pairs(matrix, scheme, ML)

        for i, j in combinations(range(4), 2):
            table = pair_table(discrete[i], discrete[j], 4)
            assert graph.weights[i, j] == mi_from_table(table, ML)

    def test_duplicate_rows_attain_maximum(self, matrix):
        """Test that an identical pair has the largest MI involving it."""
        graph = mi_all_pairs(matrix, equal_width_scheme(matrix.values, 4), ML)

        assert graph.weights[0, 1] >= graph.weights[0, 2]
        assert graph.weights[0, 1] >= graph.weights[0, 3]

    def test_serial_run_keeps_no_module_state(self, matrix):
        """Test that an in-process run leaves the worker state untouched."""
        mi_all_pairs(matrix, equal_width_scheme(matrix.values, 4), ML)

        assert mutual_info._worker_state == {}

    def test_count_correction_is_unsupported(self, matrix):
        """Test that Chao-Shen cannot drive the pipeline."""
        with pytest.raises(UnsupportedEstimatorError):
            mi_all_pairs(
                matrix,
                fd_scheme(matrix.values),
                EntropyEstimatorSpec.parse("chao-shen"),
            )
