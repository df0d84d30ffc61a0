"""General James-Stein shrinkage recipe.

The normal-mean James-Stein estimators and the optimal-intensity formula
for an arbitrary estimate/target pair given their first two moments.
"""

import logging

import numpy as np

from shrink_entropy.exceptions import NumericDomainError
from shrink_entropy.models import GeneralShrinkageInputs, NormalMeanSample

logger = logging.getLogger(__name__)


def js_zero_target(sample: NormalMeanSample) -> np.ndarray:
    """Classic James-Stein estimate ``(1 - (p - 2) / sum x_k^2) * x``.

    The common factor is not truncated and may be negative.

    Raises
    ------
    NumericDomainError
        If ``p < 3`` or ``x`` is the zero vector.
    """
    if sample.p < 3:
        raise NumericDomainError("js_zero_target", f"needs p >= 3, got {sample.p}")
    norm = float(np.sum(sample.x**2))
    if norm == 0.0:
        raise NumericDomainError("js_zero_target", "zero vector has no direction")
    factor = 1.0 - (sample.p - 2) / norm
    result: np.ndarray = factor * sample.x
    return result


def js_mean_target(sample: NormalMeanSample) -> tuple[np.ndarray, float]:
    """Shrink each component toward the component average.

    Intensity ``(p - 3) / sum (x_k - xbar)^2`` truncated into ``[0, 1]``; a
    constant vector gets intensity 1.

    Returns
    -------
    tuple[numpy.ndarray, float]
        The shrunk vector and the intensity used.

    Raises
    ------
    NumericDomainError
        If ``p < 4``.
    """
    if sample.p < 4:
        raise NumericDomainError("js_mean_target", f"needs p >= 4, got {sample.p}")
    xbar = sample.mean
    spread = float(np.sum((sample.x - xbar) ** 2))
    lam = 1.0 if spread == 0.0 else min(1.0, (sample.p - 3) / spread)
    return lam * xbar + (1.0 - lam) * sample.x, lam


def general_lambda(inputs: GeneralShrinkageInputs) -> float:
    """Optimal shrinkage intensity from moment estimates.

    ``sum [Var - Cov + Bias * gap] / sum gap^2`` where ``gap`` is the observed
    difference between estimate and target. The result is truncated into
    ``[0, 1]``; a zero denominator yields 1.
    """
    gaps = inputs.gaps
    denominator = float(np.sum(gaps**2))
    if denominator == 0.0:
        return 1.0
    numerator = float(
        np.sum(inputs.variances - inputs.covariances + inputs.biases * gaps)
    )
    lam = min(1.0, max(0.0, numerator / denominator))
    logger.debug(f"General shrinkage intensity {lam:.6g} over {gaps.size} components")
    return lam


def simulate_risk(
    p: int, mu: float, draws: int, rng: np.random.Generator
) -> dict[str, float]:
    """Monte Carlo mean squared error of ML and both James-Stein estimators.

    Each draw is one observation from ``N_p(mu * 1, I)``.

    Returns
    -------
    dict[str, float]
        Total squared error per draw, averaged, keyed by ``ml``,
        ``js-zero`` and ``js-mean`` (the latter only when ``p >= 4``).
    """
    truth = np.full(p, mu)
    totals = {"ml": 0.0, "js-zero": 0.0}
    if p >= 4:
        totals["js-mean"] = 0.0
    for _ in range(draws):
        sample = NormalMeanSample(x=rng.standard_normal(p) + truth)
        totals["ml"] += float(np.sum((sample.x - truth) ** 2))
        totals["js-zero"] += float(np.sum((js_zero_target(sample) - truth) ** 2))
        if p >= 4:
            shrunk, _ = js_mean_target(sample)
            totals["js-mean"] += float(np.sum((shrunk - truth) ** 2))
    return {name: total / draws for name, total in totals.items()}
