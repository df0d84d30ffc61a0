"""Estimators of multinomial cell frequencies.

Maximum likelihood, Dirichlet-Bayes posterior means, the Good-Turing
discount and the James-Stein shrinkage estimator with its closed-form
intensity, plus the conversions between shrinkage intensity and Dirichlet
prior mass.
"""

import logging
import math

import numpy as np

from shrink_entropy.exceptions import (
    InvalidInputError,
    UnrepresentableError,
)
from shrink_entropy.models import (
    CountVector,
    FrequencyVector,
    PriorSpec,
    ShrinkageEstimate,
)

logger = logging.getLogger(__name__)


def _require_total(counts: CountVector, minimum: int, operation: str) -> int:
    n = counts.n
    if n < minimum:
        raise InvalidInputError(
            operation, f"needs a total count of at least {minimum}, got {n}"
        )
    return n


def _require_dimension(
    counts: CountVector, freqs: FrequencyVector, operation: str
) -> None:
    if freqs.p != counts.p:
        raise InvalidInputError(
            operation, f"target has {freqs.p} cells, counts have {counts.p}"
        )


def ml_frequencies(counts: CountVector) -> np.ndarray:
    """Raw ML frequencies ``y_k / n`` as an array."""
    n = _require_total(counts, 1, "estimate_ml")
    return counts.counts / n


# =============================================================================
# Maximum likelihood and Bayes
# =============================================================================


def estimate_ml(counts: CountVector) -> FrequencyVector:
    """Maximum likelihood frequencies ``y_k / n``.

    Raises
    ------
    InvalidInputError
        If all counts are zero.
    """
    return FrequencyVector(probs=ml_frequencies(counts))


def estimate_bayes(counts: CountVector, prior: PriorSpec) -> FrequencyVector:
    """Posterior mean ``(y_k + a_k) / (n + A)`` under a Dirichlet prior.

    Parameters
    ----------
    counts : CountVector
        Observed counts.
    prior : PriorSpec
        Dirichlet pseudo-counts.

    Returns
    -------
    FrequencyVector
        Posterior-mean frequencies.

    Raises
    ------
    InvalidInputError
        If ``n + A`` is zero or a per-cell prior has the wrong dimension.
    """
    try:
        a = prior.pseudocounts(counts)
    except ValueError as e:
        raise InvalidInputError("estimate_bayes", str(e)) from e
    total = counts.n + float(a.sum())
    if total <= 0.0:
        raise InvalidInputError("estimate_bayes", "no counts and no prior mass")
    return FrequencyVector(probs=(counts.counts + a) / total)


def ml_variance(counts: CountVector) -> np.ndarray:
    """Unbiased per-cell variance ``tml (1 - tml) / (n - 1)`` of ML frequencies.

    Raises
    ------
    InvalidInputError
        If ``n < 2``.
    """
    n = _require_total(counts, 2, "ml_variance")
    tml = counts.counts / n
    result: np.ndarray = tml * (1.0 - tml) / (n - 1)
    return result


# =============================================================================
# James-Stein shrinkage
# =============================================================================


def shrinkage_lambda(counts: CountVector, target: FrequencyVector) -> float:
    """Estimated optimal shrinkage intensity toward a fixed target.

    ``(1 - sum tml^2) / ((n - 1) * sum (t - tml)^2)``, truncated at 1. When
    the ML estimate coincides with the target the intensity is 1.

    Parameters
    ----------
    counts : CountVector
        Observed counts, ``n >= 2``.
    target : FrequencyVector
        Non-stochastic shrinkage target of the same dimension.

    Returns
    -------
    float
        Intensity in ``[0, 1]``.

    Raises
    ------
    InvalidInputError
        If ``n < 2`` or the dimensions differ.
    """
    n = _require_total(counts, 2, "shrinkage_lambda")
    _require_dimension(counts, target, "shrinkage_lambda")
    tml = counts.counts / n
    gap = math.fsum((target.probs - tml) ** 2)
    if gap == 0.0:
        return 1.0
    raw = (1.0 - math.fsum(tml**2)) / ((n - 1) * gap)
    return min(1.0, raw)


def estimate_shrink(
    counts: CountVector,
    target: FrequencyVector | None = None,
    intensity: float | None = None,
) -> ShrinkageEstimate:
    """James-Stein shrinkage frequencies ``lambda * t + (1 - lambda) * tml``.

    Parameters
    ----------
    counts : CountVector
        Observed counts.
    target : FrequencyVector, optional
        Shrinkage target; uniform when omitted.
    intensity : float, optional
        Fixed intensity in ``[0, 1]`` overriding the estimated one.

    Returns
    -------
    ShrinkageEstimate
        Shrunk frequencies with the intensity and target used.
    """
    if target is None:
        target = FrequencyVector.uniform(counts.p)
    _require_dimension(counts, target, "estimate_shrink")
    if intensity is None:
        lam = shrinkage_lambda(counts, target)
    else:
        if not 0.0 <= intensity <= 1.0:
            raise InvalidInputError(
                "estimate_shrink", f"intensity {intensity} is outside [0, 1]"
            )
        lam = float(intensity)
    tml = ml_frequencies(counts)
    freqs = lam * target.probs + (1.0 - lam) * tml
    logger.debug(f"Shrinkage intensity {lam:.6g} for p={counts.p}, n={counts.n}")
    return ShrinkageEstimate(
        freqs=FrequencyVector(probs=freqs), intensity=lam, target=target
    )


def shrink_to_bayes_A(counts: CountVector, lam: float) -> float:
    """Dirichlet prior mass equivalent to a shrinkage intensity.

    ``A = n * lambda / (1 - lambda)``; with ``a_k = t_k * A`` the Bayes
    estimate reproduces the shrinkage estimate.

    Raises
    ------
    UnrepresentableError
        If ``lambda == 1``.
    InvalidInputError
        If ``lambda`` is outside ``[0, 1]``.
    """
    if not 0.0 <= lam <= 1.0:
        raise InvalidInputError(
            "shrink_to_bayes_A", f"intensity {lam} outside [0, 1]"
        )
    if lam == 1.0:
        raise UnrepresentableError("shrink_to_bayes_A", lam)
    return counts.n * lam / (1.0 - lam)


def pseudo_bayes_A(counts: CountVector, lam: float) -> float:
    """First-order approximation ``A = n * lambda`` of the equivalent prior mass."""
    if not 0.0 <= lam <= 1.0:
        raise InvalidInputError("pseudo_bayes_A", f"intensity {lam} outside [0, 1]")
    return counts.n * lam


def estimate_pseudo_bayes(
    counts: CountVector, target: FrequencyVector | None = None
) -> FrequencyVector:
    """Bayes estimate with the data-driven prior ``a_k = t_k * n * lambda``.

    The intensity is the one estimated by :func:`shrinkage_lambda`.
    """
    if target is None:
        target = FrequencyVector.uniform(counts.p)
    lam = shrinkage_lambda(counts, target)
    mass = pseudo_bayes_A(counts, lam)
    return estimate_bayes(counts, PriorSpec.from_cells(target.probs * mass))


# =============================================================================
# Good-Turing
# =============================================================================


def good_turing(counts: CountVector) -> np.ndarray:
    """Good-Turing discounted frequencies ``(1 - m_1 / n) * tml``.

    The result sums to ``1 - m_1 / n`` and is therefore returned as a plain
    array rather than a :class:`FrequencyVector`.

    Raises
    ------
    InvalidInputError
        If all counts are zero.
    """
    n = _require_total(counts, 1, "good_turing")
    result: np.ndarray = (1.0 - counts.m_one / n) * (counts.counts / n)
    return result


def coverage(counts: CountVector) -> float:
    """Estimated sample coverage ``1 - m_1 / n``.

    When every observation is a singleton, ``m_1`` is taken as ``n - 1`` so
    the coverage stays positive.
    """
    n = _require_total(counts, 1, "coverage")
    m_one = counts.m_one
    if m_one == n:
        m_one = n - 1
    return 1.0 - m_one / n
