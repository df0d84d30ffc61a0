from .bench import BenchCell, BenchConfig, BenchResult, ScenarioSpec, TruthSummary
from .counts import CountVector, FrequencyVector, PriorSpec, ShrinkageEstimate
from .estimators import ESTIMATOR_NAMES, EntropyEstimatorSpec
from .graph import MiGraph
from .shrinkage import GeneralShrinkageInputs, NormalMeanSample
from .tables import ContingencyTable, DiscretizationScheme, ExpressionMatrix

__all__ = [
    "CountVector",
    "FrequencyVector",
    "PriorSpec",
    "ShrinkageEstimate",
    "EntropyEstimatorSpec",
    "ESTIMATOR_NAMES",
    "NormalMeanSample",
    "GeneralShrinkageInputs",
    "ExpressionMatrix",
    "DiscretizationScheme",
    "ContingencyTable",
    "MiGraph",
    "ScenarioSpec",
    "BenchConfig",
    "BenchCell",
    "BenchResult",
    "TruthSummary",
]
