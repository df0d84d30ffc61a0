from __future__ import annotations

import math
from typing import Literal, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .arrays import CountArray, FloatVector

SIMPLEX_TOL = 1e-12

PriorPreset = Literal["none", "jeffreys", "laplace", "perks", "minimax"]


class CountVector(BaseModel):
    """Observed cell counts of a multinomial sample.

    Parameters
    ----------
    counts : numpy.ndarray
        Nonnegative integer counts ``y_k``; the length is the dimension ``p``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    counts: CountArray

    @classmethod
    def from_sequence(cls, values: Sequence[int] | np.ndarray) -> CountVector:
        return cls(counts=values)

    @property
    def p(self) -> int:
        """Number of cells."""
        return int(self.counts.size)

    @property
    def n(self) -> int:
        """Total count."""
        return int(self.counts.sum())

    @property
    def m_pos(self) -> int:
        """Number of cells with a positive count."""
        return int(np.count_nonzero(self.counts))

    @property
    def m_one(self) -> int:
        """Number of singleton cells."""
        return int(np.count_nonzero(self.counts == 1))


class FrequencyVector(BaseModel):
    """A point on the probability simplex.

    Parameters
    ----------
    probs : numpy.ndarray
        Cell probabilities; nonnegative and summing to one within ``1e-12``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    probs: FloatVector

    @field_validator("probs")
    @classmethod
    def validate_simplex(cls, value: np.ndarray) -> np.ndarray:
        if np.any(value < 0.0) or np.any(value > 1.0):
            raise ValueError("Frequencies must lie in [0, 1].")
        if abs(float(value.sum()) - 1.0) > SIMPLEX_TOL:
            raise ValueError(f"Frequencies sum to {value.sum()!r}, not 1.")
        return value

    @classmethod
    def uniform(cls, p: int) -> FrequencyVector:
        """The maximum-entropy distribution over ``p`` cells."""
        return cls(probs=np.full(p, 1.0 / p))

    @property
    def p(self) -> int:
        return int(self.probs.size)


class PriorSpec(BaseModel):
    """Dirichlet prior given as pseudo-counts.

    Exactly one of ``preset``, ``value`` or ``per_cell`` is set. The presets
    ``perks`` (``1/p``) and ``minimax`` (``sqrt(n)/p``) are resolved against
    the counts they are applied to.

    Parameters
    ----------
    preset : str, optional
        One of ``none`` (0), ``jeffreys`` (1/2), ``laplace`` (1),
        ``perks`` (1/p) or ``minimax`` (sqrt(n)/p).
    value : float, optional
        Symmetric pseudo-count applied to every cell.
    per_cell : numpy.ndarray, optional
        Individual pseudo-counts ``a_k``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    preset: PriorPreset | None = None
    value: float | None = Field(default=None, ge=0.0)
    per_cell: FloatVector | None = None

    @model_validator(mode="after")
    def validate_single_source(self) -> PriorSpec:
        given = [x is not None for x in (self.preset, self.value, self.per_cell)]
        if sum(given) != 1:
            raise ValueError(
                "Exactly one of preset, value or per_cell must be provided."
            )
        if self.per_cell is not None and np.any(self.per_cell < 0.0):
            raise ValueError("Pseudo-counts must be nonnegative.")
        return self

    @classmethod
    def none(cls) -> PriorSpec:
        return cls(preset="none")

    @classmethod
    def jeffreys(cls) -> PriorSpec:
        return cls(preset="jeffreys")

    @classmethod
    def laplace(cls) -> PriorSpec:
        return cls(preset="laplace")

    @classmethod
    def perks(cls) -> PriorSpec:
        return cls(preset="perks")

    @classmethod
    def minimax(cls) -> PriorSpec:
        return cls(preset="minimax")

    @classmethod
    def symmetric(cls, a: float) -> PriorSpec:
        return cls(value=a)

    @classmethod
    def from_cells(cls, a: Sequence[float] | np.ndarray) -> PriorSpec:
        return cls(per_cell=a)

    @property
    def label(self) -> str:
        """Short name used in reports and CLI output."""
        if self.preset is not None:
            return self.preset
        if self.value is not None:
            return f"a={self.value:g}"
        return "per-cell"

    def pseudocounts(self, counts: CountVector) -> np.ndarray:
        """Resolve the pseudo-counts ``a_k`` for the given counts.

        Raises
        ------
        ValueError
            If a per-cell prior does not match the dimension of ``counts``.
        """
        p = counts.p
        if self.per_cell is not None:
            if self.per_cell.size != p:
                raise ValueError(
                    f"Prior has {self.per_cell.size} cells, counts have {p}."
                )
            return self.per_cell
        if self.value is not None:
            a = self.value
        else:
            a = {
                "none": 0.0,
                "jeffreys": 0.5,
                "laplace": 1.0,
                "perks": 1.0 / p,
                "minimax": math.sqrt(counts.n) / p,
            }[self.preset or "none"]
        return np.full(p, a)

    def total(self, counts: CountVector) -> float:
        """Prior sample size ``A``."""
        return float(self.pseudocounts(counts).sum())


class ShrinkageEstimate(BaseModel):
    """Shrunk cell frequencies together with the intensity and target used.

    Parameters
    ----------
    freqs : FrequencyVector
        ``intensity * target + (1 - intensity) * ml``.
    intensity : float
        Shrinkage intensity lambda in ``[0, 1]``.
    target : FrequencyVector
        Shrinkage target ``t_k``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    freqs: FrequencyVector
    intensity: float = Field(ge=0.0, le=1.0)
    target: FrequencyVector
