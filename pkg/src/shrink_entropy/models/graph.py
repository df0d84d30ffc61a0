from __future__ import annotations

from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from .arrays import BoolMatrix, FloatMatrix


class MiGraph(BaseModel):
    """Weighted undirected graph of pairwise mutual information.

    Parameters
    ----------
    labels : tuple[str, ...]
        Node names in input order.
    weights : numpy.ndarray
        Symmetric ``G x G`` nonnegative weights with a zero diagonal.
    mask : numpy.ndarray
        Symmetric boolean edge-present mask with a false diagonal.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    labels: tuple[str, ...]
    weights: FloatMatrix
    mask: BoolMatrix

    @model_validator(mode="after")
    def validate_structure(self) -> MiGraph:
        g = len(self.labels)
        if self.weights.shape != (g, g) or self.mask.shape != (g, g):
            raise ValueError(f"Weights and mask must be {g}x{g}.")
        if len(set(self.labels)) != g:
            raise ValueError("Node labels must be unique.")
        if not np.array_equal(self.weights, self.weights.T):
            raise ValueError("Weights must be symmetric.")
        if np.any(np.diag(self.weights) != 0.0):
            raise ValueError("Weights must have a zero diagonal.")
        if np.any(self.weights < 0.0):
            raise ValueError("Weights must be nonnegative.")
        if not np.array_equal(self.mask, self.mask.T) or np.any(np.diag(self.mask)):
            raise ValueError("Mask must be symmetric with a false diagonal.")
        return self

    @classmethod
    def complete(cls, labels: Sequence[str], weights: np.ndarray) -> MiGraph:
        """Graph with every off-diagonal edge present."""
        g = len(labels)
        return cls(labels=tuple(labels), weights=weights, mask=~np.eye(g, dtype=bool))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def surviving_weights(self) -> np.ndarray:
        """Weights with masked-out edges reported as zero."""
        return np.where(self.mask, self.weights, 0.0)
