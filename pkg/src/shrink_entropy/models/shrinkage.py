from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from .arrays import FloatVector


class NormalMeanSample(BaseModel):
    """A single observation from a p-variate normal with identity covariance.

    Parameters
    ----------
    x : numpy.ndarray
        The observed vector.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: FloatVector

    @property
    def p(self) -> int:
        return int(self.x.size)

    @property
    def mean(self) -> float:
        return float(self.x.mean())


class GeneralShrinkageInputs(BaseModel):
    """Moment estimates feeding the general optimal-intensity formula.

    Parameters
    ----------
    estimates : numpy.ndarray
        Unrestricted component estimates.
    targets : numpy.ndarray
        Target estimates.
    variances : numpy.ndarray
        Variance estimates of ``estimates``; nonnegative.
    covariances : numpy.ndarray
        Covariance estimates between ``estimates`` and ``targets``.
    biases : numpy.ndarray
        Bias estimates of ``estimates``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    estimates: FloatVector
    targets: FloatVector
    variances: FloatVector
    covariances: FloatVector
    biases: FloatVector

    @model_validator(mode="after")
    def validate_lengths(self) -> GeneralShrinkageInputs:
        sizes = {
            arr.size
            for arr in (
                self.estimates,
                self.targets,
                self.variances,
                self.covariances,
                self.biases,
            )
        }
        if len(sizes) != 1:
            raise ValueError("All moment vectors must have the same length.")
        if np.any(self.variances < 0.0):
            raise ValueError("Variances must be nonnegative.")
        return self

    @classmethod
    def unbiased(
        cls,
        estimates: np.ndarray,
        targets: np.ndarray,
        variances: np.ndarray,
    ) -> GeneralShrinkageInputs:
        """Inputs for an unbiased estimate and a fixed target."""
        zeros = np.zeros_like(np.asarray(estimates, dtype=np.float64))
        return cls(
            estimates=estimates,
            targets=targets,
            variances=variances,
            covariances=zeros,
            biases=zeros,
        )

    @property
    def gaps(self) -> np.ndarray:
        """Observed differences between estimates and targets."""
        return self.estimates - self.targets
