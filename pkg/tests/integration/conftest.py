"""Fixtures for integration tests.

These tests run Monte Carlo experiments and the full MI pipeline; they take
seconds to minutes.
Run: pytest -m integration
"""

import numpy as np
import pytest

from shrink_entropy.models import ExpressionMatrix


@pytest.fixture(scope="module")
def expression_102() -> ExpressionMatrix:
    """102 variables over 9 samples with a few correlated blocks."""
    rng = np.random.default_rng(102)
    values = rng.normal(size=(102, 9))
    values[1:6] += values[0]
    labels = tuple(f"gene{i}" for i in range(102))
    return ExpressionMatrix(labels=labels, values=values)
