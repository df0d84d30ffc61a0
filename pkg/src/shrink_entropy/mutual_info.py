"""Mutual information from discretized measurements.

Pipeline: pool all measurements into one Freedman-Diaconis (or fixed-K)
equal-width scheme, discretize, count each variable pair into a ``K x K``
contingency table, estimate the joint cell frequencies and take
``H(X) + H(Y) - H(X, Y)`` with marginals summed from the estimated joint.
"""

import logging
import math
from itertools import combinations
from multiprocessing import Pool
from typing import Any

import numpy as np
from scipy.special import entr, rel_entr

from shrink_entropy.entropy import frequencies_from_spec
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
    MiGraph,
)

logger = logging.getLogger(__name__)

MIN_LEVELS = 2


# =============================================================================
# Discretization
# =============================================================================


def _pooled(values: Any) -> np.ndarray:
    pooled = np.asarray(values, dtype=np.float64).ravel()
    if pooled.size < 2 or not np.all(np.isfinite(pooled)):
        raise InvalidInputError("discretization", "need at least 2 finite values")
    return pooled


def fd_bin_width(values: Any) -> float:
    """Freedman-Diaconis width ``2 * IQR * N^(-1/3)`` of the pooled values.

    Quartiles use linear interpolation between order statistics.

    Raises
    ------
    DegenerateDataError
        If the interquartile range is zero.
    """
    pooled = _pooled(values)
    q1, q3 = np.percentile(pooled, [25.0, 75.0])
    iqr = float(q3 - q1)
    if iqr <= 0.0:
        logger.error(f"Zero interquartile range over {pooled.size} values")
        raise DegenerateDataError("fd_bin_count", iqr)
    return 2.0 * iqr * pooled.size ** (-1.0 / 3.0)


def fd_bin_count(values: Any) -> int:
    """Number of levels ``K = ceil((max - min) / h)`` from the Freedman-Diaconis width.

    The ratio is rounded to 9 decimals before the ceiling so that spans that
    are exact multiples of the width do not gain a spurious bin. At least two
    levels are returned.
    """
    pooled = _pooled(values)
    width = fd_bin_width(pooled)
    span = float(pooled.max() - pooled.min())
    return max(MIN_LEVELS, math.ceil(round(span / width, 9)))


def equal_width_scheme(values: Any, levels: int) -> DiscretizationScheme:
    """Global equal-width scheme with ``levels`` bins over the pooled range."""
    if levels < MIN_LEVELS:
        raise InvalidInputError("equal_width_scheme", f"need K >= 2, got {levels}")
    pooled = _pooled(values)
    low, high = float(pooled.min()), float(pooled.max())
    if high <= low:
        raise DegenerateDataError("equal_width_scheme", 0.0)
    return DiscretizationScheme(edges=np.linspace(low, high, levels + 1))


def fd_scheme(values: Any) -> DiscretizationScheme:
    """Equal-width scheme with the Freedman-Diaconis number of levels."""
    levels = fd_bin_count(values)
    logger.info(f"Freedman-Diaconis rule selected K={levels}")
    return equal_width_scheme(values, levels)


def discretize(matrix: ExpressionMatrix, scheme: DiscretizationScheme) -> np.ndarray:
    """Replace every measurement by its bin index in ``[0, K)``.

    Intervals are right-open except the last; values outside the scheme's
    range are clamped to the boundary bins.
    """
    index = np.searchsorted(scheme.edges, matrix.values, side="right") - 1
    outside = int(np.count_nonzero((index < 0) | (index >= scheme.levels)))
    if outside:
        logger.debug(f"Clamping {outside} out-of-range or last-edge values")
    result: np.ndarray = np.clip(index, 0, scheme.levels - 1).astype(np.int64)
    return result


def pair_table(x: np.ndarray, y: np.ndarray, levels: int) -> ContingencyTable:
    """Count the joint levels of two discretized rows.

    Raises
    ------
    InvalidInputError
        If the rows differ in length or hold levels outside ``[0, levels)``.
    """
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != y.shape or x.ndim != 1:
        raise InvalidInputError(
            "pair_table", f"row lengths differ: {x.shape} vs {y.shape}"
        )
    for row in (x, y):
        if row.size and (row.min() < 0 or row.max() >= levels):
            raise InvalidInputError("pair_table", f"levels must lie in [0, {levels})")
    flat = np.bincount(x * levels + y, minlength=levels * levels)
    return ContingencyTable(counts=flat.reshape(levels, levels))


# =============================================================================
# Mutual information
# =============================================================================


def _require_frequencies(estimator: EntropyEstimatorSpec, operation: str) -> None:
    if not estimator.produces_frequencies:
        raise UnsupportedEstimatorError(operation, estimator.name)


def estimate_joint(
    table: ContingencyTable, estimator: EntropyEstimatorSpec
) -> np.ndarray:
    """Estimated ``K x K`` joint cell frequencies of a table."""
    _require_frequencies(estimator, "estimate_joint")
    freqs = frequencies_from_spec(table.flatten(), estimator)
    return freqs.probs.reshape(table.levels, table.levels)


def _margins(joint: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    rows = np.array([math.fsum(row) for row in joint])
    columns = np.array([math.fsum(column) for column in joint.T])
    return rows, columns


def table_entropies(
    table: ContingencyTable, estimator: EntropyEstimatorSpec
) -> tuple[float, float, float]:
    """Plugin entropies ``(H(X), H(Y), H(X, Y))`` of the estimated joint.

    Marginals are summed from the estimated joint rather than estimated
    separately.

    Raises
    ------
    UnsupportedEstimatorError
        For estimators without a frequency vector.
    """
    joint = estimate_joint(table, estimator)
    rows, columns = _margins(joint)
    return (
        math.fsum(entr(rows)),
        math.fsum(entr(columns)),
        math.fsum(entr(joint.ravel())),
    )


def mi_from_table(table: ContingencyTable, estimator: EntropyEstimatorSpec) -> float:
    """Mutual information ``H(X) + H(Y) - H(X, Y)`` of a contingency table.

    Summing the marginals from the estimated joint keeps the decomposition
    nonnegative up to rounding; residue below zero is reported as 0.

    Raises
    ------
    UnsupportedEstimatorError
        For estimators without a frequency vector.
    """
    h_x, h_y, h_xy = table_entropies(table, estimator)
    return max(0.0, h_x + h_y - h_xy)


def kl_divergence(p: FrequencyVector, q: FrequencyVector) -> float:
    """Kullback-Leibler divergence ``sum p log(p / q)``; infinite off q's support."""
    if p.p != q.p:
        raise InvalidInputError("kl_divergence", f"dimensions {p.p} and {q.p}")
    return math.fsum(rel_entr(p.probs, q.probs))


def mi_from_table_kl(
    table: ContingencyTable, estimator: EntropyEstimatorSpec
) -> float:
    """Mutual information as the divergence of the joint from its margin product."""
    joint = estimate_joint(table, estimator)
    rows, columns = _margins(joint)
    product = np.outer(rows, columns)
    return math.fsum(rel_entr(joint.ravel(), product.ravel()))


def gaussian_mi(rho: float) -> float:
    """Mutual information ``-log(1 - rho^2) / 2`` of a bivariate normal.

    Raises
    ------
    NumericDomainError
        If ``|rho| >= 1``.
    """
    if not abs(rho) < 1.0:
        raise NumericDomainError("gaussian_mi", f"|rho| must be < 1, got {rho}", rho)
    return -0.5 * math.log1p(-(rho**2))


# =============================================================================
# All pairs
# =============================================================================

_worker_state: dict[str, Any] = {}


def _init_worker(
    discrete: np.ndarray, levels: int, estimator: EntropyEstimatorSpec
) -> None:
    _worker_state.update(discrete=discrete, levels=levels, estimator=estimator)


def _pair_value(
    discrete: np.ndarray,
    levels: int,
    estimator: EntropyEstimatorSpec,
    pair: tuple[int, int],
) -> float:
    i, j = pair
    return mi_from_table(pair_table(discrete[i], discrete[j], levels), estimator)


def _pair_mi(pair: tuple[int, int]) -> float:
    return _pair_value(
        _worker_state["discrete"],
        _worker_state["levels"],
        _worker_state["estimator"],
        pair,
    )


def mi_all_pairs(
    matrix: ExpressionMatrix,
    scheme: DiscretizationScheme,
    estimator: EntropyEstimatorSpec,
    workers: int = 1,
) -> MiGraph:
    """Mutual information of every unordered variable pair.

    Each pair is computed independently, so serial and parallel runs give
    identical weights.

    Parameters
    ----------
    matrix : ExpressionMatrix
        Continuous measurements.
    scheme : DiscretizationScheme
        Global scheme applied to every variable.
    estimator : EntropyEstimatorSpec
        Frequency-producing estimator for the joint tables.
    workers : int
        Worker processes; 1 computes in-process.

    Returns
    -------
    MiGraph
        Complete graph holding ``G (G - 1) / 2`` MI values.
    """
    _require_frequencies(estimator, "mi_all_pairs")
    discrete = discretize(matrix, scheme)
    pairs = list(combinations(range(matrix.n_variables), 2))
    logger.info(
        f"Estimating MI for {len(pairs)} pairs with {estimator.name}, "
        f"K={scheme.levels}, workers={workers}"
    )
    if workers > 1:
        with Pool(
            workers,
            initializer=_init_worker,
            initargs=(discrete, scheme.levels, estimator),
        ) as pool:
            values = pool.map(_pair_mi, pairs, chunksize=max(1, len(pairs) // workers))
    else:
        values = [
            _pair_value(discrete, scheme.levels, estimator, pair) for pair in pairs
        ]
    weights = np.zeros((matrix.n_variables, matrix.n_variables))
    for (i, j), value in zip(pairs, values):
        weights[i, j] = weights[j, i] = value
    return MiGraph.complete(matrix.labels, weights)
