"""Random generation of true frequencies and multinomial counts.

Every random draw comes from a PCG64 generator seeded by a
``SeedSequence`` whose spawn key identifies the run, so results do not
depend on scheduling.
"""

import logging

import numpy as np

from shrink_entropy.exceptions import InvalidInputError
from shrink_entropy.models import CountVector, FrequencyVector, ScenarioSpec

logger = logging.getLogger(__name__)


def substream(seed: int, *keys: int) -> np.random.Generator:
    """Independent generator for the run identified by ``keys``."""
    sequence = np.random.SeedSequence(seed, spawn_key=tuple(keys))
    return np.random.Generator(np.random.PCG64(sequence))


def sample_dirichlet(
    alpha: float, size: int, rng: np.random.Generator
) -> tuple[np.ndarray, int]:
    """Symmetric Dirichlet draw via normalized Gamma variates.

    Shapes below 1 are sampled in log space as
    ``log Gamma(alpha + 1) + log(U) / alpha``, which stays accurate for tiny
    shapes such as 0.0007. Cells that underflow to zero after normalization
    are kept at exactly 0.

    Returns
    -------
    tuple[numpy.ndarray, int]
        The simplex point and the number of cells that underflowed.
    """
    if alpha >= 1.0:
        gammas = rng.standard_gamma(alpha, size=size)
        probs = gammas / gammas.sum()
    else:
        log_gammas = np.log(rng.standard_gamma(alpha + 1.0, size=size))
        log_gammas += np.log1p(-rng.random(size)) / alpha
        scaled = np.exp(log_gammas - log_gammas.max())
        probs = scaled / scaled.sum()
    clamped = int(np.count_nonzero(probs == 0.0))
    if clamped:
        logger.debug(f"Dirichlet(a={alpha}) draw underflowed in {clamped} cells")
    return probs, clamped


def zipf_frequencies(p: int, exponent: float) -> np.ndarray:
    """Deterministic power law ``theta_k ~ k^(-s)``."""
    weights = np.arange(1, p + 1, dtype=np.float64) ** (-exponent)
    result: np.ndarray = weights / weights.sum()
    return result


def draw_true_probs(
    scenario: ScenarioSpec, rng: np.random.Generator
) -> tuple[np.ndarray, int]:
    """True cell frequencies of one run plus the Dirichlet underflow count."""
    if scenario.kind == "zipf":
        return zipf_frequencies(scenario.p, scenario.exponent), 0
    alpha = scenario.dirichlet_alpha or 1.0
    if scenario.kind == "half-zeros":
        active = scenario.p // 2
        head, clamped = sample_dirichlet(alpha, active, rng)
        return np.concatenate([head, np.zeros(scenario.p - active)]), clamped
    return sample_dirichlet(alpha, scenario.p, rng)


def draw_true_freqs(
    scenario: ScenarioSpec, rng: np.random.Generator
) -> FrequencyVector:
    """True cell frequencies of one simulation run."""
    probs, _ = draw_true_probs(scenario, rng)
    return FrequencyVector(probs=probs)


def draw_counts(
    theta: FrequencyVector, n: int, rng: np.random.Generator
) -> CountVector:
    """Multinomial sample of size ``n``.

    Raises
    ------
    InvalidInputError
        If ``n < 1``.
    """
    if n < 1:
        raise InvalidInputError("draw_counts", f"sample size must be >= 1, got {n}")
    return CountVector(counts=rng.multinomial(n, theta.probs))
