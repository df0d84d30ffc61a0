from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from shrink_entropy.exceptions import UnsupportedEstimatorError

from .counts import PriorSpec

EstimatorKind = Literal["ml", "miller-madow", "bayes", "chao-shen", "shrink"]

_BAYES_PRESETS = {
    "bayes-jeffreys": PriorSpec.jeffreys,
    "bayes-laplace": PriorSpec.laplace,
    "bayes-perks": PriorSpec.perks,
    "bayes-minimax": PriorSpec.minimax,
}

ESTIMATOR_NAMES = (
    "ml",
    "miller-madow",
    "chao-shen",
    "shrink",
    *_BAYES_PRESETS,
    "bayes",
)


class EntropyEstimatorSpec(BaseModel):
    """Selects one entropy estimator.

    Parameters
    ----------
    kind : str
        Estimator family.
    prior : PriorSpec, optional
        Dirichlet prior; required for, and only allowed with, ``bayes``.
    """

    model_config = ConfigDict(frozen=True)

    kind: EstimatorKind
    prior: PriorSpec | None = None

    @model_validator(mode="after")
    def validate_prior(self) -> EntropyEstimatorSpec:
        if (self.kind == "bayes") != (self.prior is not None):
            raise ValueError("A prior is required for, and only for, bayes.")
        return self

    @classmethod
    def parse(cls, name: str, a: float | None = None) -> EntropyEstimatorSpec:
        """Build a spec from its CLI name.

        Parameters
        ----------
        name : str
            One of :data:`ESTIMATOR_NAMES`.
        a : float, optional
            Symmetric pseudo-count, used by plain ``bayes`` only.

        Raises
        ------
        UnsupportedEstimatorError
            If the name is unknown or ``bayes`` lacks a pseudo-count.
        """
        if name in _BAYES_PRESETS:
            return cls(kind="bayes", prior=_BAYES_PRESETS[name]())
        if name == "bayes":
            if a is None:
                raise UnsupportedEstimatorError("parse", "bayes without --prior")
            return cls(kind="bayes", prior=PriorSpec.symmetric(a))
        if name in ("ml", "miller-madow", "chao-shen", "shrink"):
            return cls(kind=name)  # type: ignore[arg-type]
        raise UnsupportedEstimatorError("parse", name)

    @classmethod
    def benchmark_set(cls) -> list[EntropyEstimatorSpec]:
        """The eight estimators compared in the simulation study."""
        return [
            cls.parse(name)
            for name in (
                "ml",
                "miller-madow",
                "bayes-jeffreys",
                "bayes-laplace",
                "bayes-perks",
                "bayes-minimax",
                "chao-shen",
                "shrink",
            )
        ]

    @property
    def name(self) -> str:
        if self.prior is None:
            return self.kind
        if self.prior.preset is not None:
            return f"bayes-{self.prior.preset}"
        return f"bayes({self.prior.label})"

    @property
    def produces_frequencies(self) -> bool:
        """Whether the estimator yields a compatible frequency vector."""
        return self.kind in ("ml", "bayes", "shrink")
