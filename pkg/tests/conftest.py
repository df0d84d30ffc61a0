"""Shared fixtures for unit and integration tests."""

import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so every randomized test is reproducible."""
    return np.random.default_rng(20090619)
