"""Shannon entropy estimators, in nats.

Plugin estimators take a frequency vector; Miller-Madow and Chao-Shen work
on the counts directly and have no compatible frequency vector.
"""

import logging
import math

import numpy as np
from scipy.special import entr

from shrink_entropy.exceptions import UnsupportedEstimatorError
from shrink_entropy.frequencies import (
    coverage,
    estimate_bayes,
    estimate_ml,
    estimate_shrink,
    ml_frequencies,
)
from shrink_entropy.models import (
    CountVector,
    EntropyEstimatorSpec,
    FrequencyVector,
    PriorSpec,
    ShrinkageEstimate,
)

logger = logging.getLogger(__name__)


def _plugin(probs: np.ndarray) -> float:
    return math.fsum(entr(probs))


def entropy_plugin(freqs: FrequencyVector) -> float:
    """Shannon entropy ``-sum theta_k log theta_k`` with ``0 log 0 = 0``."""
    return _plugin(freqs.probs)


def entropy_ml(counts: CountVector) -> float:
    """Plugin entropy of the maximum likelihood frequencies."""
    return _plugin(ml_frequencies(counts))


def miller_madow_correction(counts: CountVector) -> float:
    """First-order bias correction ``(m_pos - 1) / (2 n)``."""
    return (counts.m_pos - 1) / (2.0 * counts.n)


def entropy_miller_madow(counts: CountVector) -> float:
    """ML entropy plus the Miller-Madow bias correction.

    The result is not clamped and may exceed ``log p``.
    """
    return entropy_ml(counts) + miller_madow_correction(counts)


def entropy_bayes(counts: CountVector, prior: PriorSpec) -> float:
    """Plugin entropy of the Dirichlet posterior-mean frequencies."""
    return entropy_plugin(estimate_bayes(counts, prior))


def entropy_chao_shen(counts: CountVector) -> float:
    """Chao-Shen estimator: Good-Turing coverage with Horvitz-Thompson weights.

    Computes ``-sum theta_k log theta_k / (1 - (1 - theta_k)^n)`` over the
    observed cells, with ``theta_k = C * y_k / n`` and coverage
    ``C = 1 - m_1 / n``. All-singleton samples use ``m_1 = n - 1``.
    """
    n = counts.n
    c = coverage(counts)
    observed = counts.counts[counts.counts > 0]
    theta = c * observed / n
    with np.errstate(divide="ignore"):
        inclusion = -np.expm1(n * np.log1p(-theta))
    return math.fsum(entr(theta) / inclusion)


def entropy_shrink(
    counts: CountVector, target: FrequencyVector | None = None
) -> tuple[float, ShrinkageEstimate]:
    """Plugin entropy of the shrinkage frequencies.

    Returns
    -------
    tuple[float, ShrinkageEstimate]
        The entropy and the underlying shrinkage estimate.
    """
    estimate = estimate_shrink(counts, target)
    return entropy_plugin(estimate.freqs), estimate


# =============================================================================
# Dispatch by estimator spec
# =============================================================================


def frequencies_from_spec(
    counts: CountVector, spec: EntropyEstimatorSpec
) -> FrequencyVector:
    """Cell frequencies of a frequency-producing estimator.

    Raises
    ------
    UnsupportedEstimatorError
        For Miller-Madow and Chao-Shen, which have no frequency vector.
    """
    if spec.kind == "ml":
        return estimate_ml(counts)
    if spec.kind == "bayes" and spec.prior is not None:
        return estimate_bayes(counts, spec.prior)
    if spec.kind == "shrink":
        return estimate_shrink(counts).freqs
    raise UnsupportedEstimatorError("frequencies_from_spec", spec.name)


def entropy_from_spec(counts: CountVector, spec: EntropyEstimatorSpec) -> float:
    """Entropy estimate selected by ``spec``."""
    if spec.kind == "miller-madow":
        return entropy_miller_madow(counts)
    if spec.kind == "chao-shen":
        return entropy_chao_shen(counts)
    if spec.kind == "ml":
        return entropy_ml(counts)
    return entropy_plugin(frequencies_from_spec(counts, spec))
