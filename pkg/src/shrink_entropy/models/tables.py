from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .arrays import CountMatrix, FloatMatrix, FloatVector
from .counts import CountVector


class ExpressionMatrix(BaseModel):
    """Continuous measurements of ``G`` variables over ``n`` samples.

    Parameters
    ----------
    labels : tuple[str, ...]
        Unique variable names, one per row.
    values : numpy.ndarray
        ``G x n`` matrix of finite measurements.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    labels: tuple[str, ...]
    values: FloatMatrix

    @model_validator(mode="after")
    def validate_shape(self) -> ExpressionMatrix:
        g, n = self.values.shape
        if g < 2 or n < 2:
            raise ValueError(f"Need at least 2 variables and 2 samples, got {g}x{n}.")
        if len(self.labels) != g:
            raise ValueError(f"{len(self.labels)} labels for {g} rows.")
        if len(set(self.labels)) != g:
            raise ValueError("Variable labels must be unique.")
        return self

    @property
    def n_variables(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_samples(self) -> int:
        return int(self.values.shape[1])


class DiscretizationScheme(BaseModel):
    """Global equal-width bins shared by all variables.

    Bins are right-open except the last one, which is closed.

    Parameters
    ----------
    edges : numpy.ndarray
        ``K + 1`` strictly increasing bin edges.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edges: FloatVector

    @field_validator("edges")
    @classmethod
    def validate_edges(cls, value: np.ndarray) -> np.ndarray:
        if value.size < 3:
            raise ValueError("A scheme needs at least two levels.")
        if np.any(np.diff(value) <= 0.0):
            raise ValueError("Bin edges must be strictly increasing.")
        return value

    @property
    def levels(self) -> int:
        """Number of levels ``K``."""
        return int(self.edges.size - 1)


class ContingencyTable(BaseModel):
    """Joint counts of a discretized variable pair.

    Parameters
    ----------
    counts : numpy.ndarray
        ``K x K`` nonnegative integer counts; rows index X, columns index Y.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    counts: CountMatrix

    @field_validator("counts")
    @classmethod
    def validate_square(cls, value: np.ndarray) -> np.ndarray:
        if value.shape[0] != value.shape[1]:
            raise ValueError(f"Table must be square, got {value.shape}.")
        return value

    @property
    def levels(self) -> int:
        return int(self.counts.shape[0])

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    @property
    def row_margins(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def column_margins(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    def flatten(self) -> CountVector:
        """Row-major ``K**2`` cell counts."""
        return CountVector(counts=self.counts.ravel(order="C"))

    @classmethod
    def unflatten(cls, counts: CountVector, levels: int) -> ContingencyTable:
        return cls(counts=counts.counts.reshape(levels, levels, order="C"))

    def transpose(self) -> ContingencyTable:
        return ContingencyTable(counts=self.counts.T)
