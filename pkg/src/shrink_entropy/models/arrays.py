"""Annotated numpy array types for pydantic models.

Arrays are copied on validation and frozen (``writeable=False``) so the
models that hold them stay immutable.
"""

from __future__ import annotations

from typing import Annotated, Any

import numpy as np
from pydantic import BeforeValidator, PlainSerializer


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def as_count_array(value: Any) -> np.ndarray:
    """Coerce a sequence to a 1-D array of nonnegative int64 counts."""
    raw = np.array(value)
    if raw.ndim != 1 or raw.size == 0:
        raise ValueError("Counts must be a non-empty one-dimensional sequence.")
    if raw.dtype.kind == "f":
        if not np.all(np.isfinite(raw)) or np.any(raw != np.round(raw)):
            raise ValueError("Counts must be integers.")
    elif raw.dtype.kind not in "iu":
        raise ValueError("Counts must be integers.")
    arr = raw.astype(np.int64)
    if np.any(arr < 0):
        raise ValueError("Counts must be nonnegative.")
    return _freeze(arr)


def as_float_vector(value: Any) -> np.ndarray:
    """Coerce a sequence to a finite 1-D float64 array."""
    arr = np.array(value, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("Expected a non-empty one-dimensional sequence.")
    if not np.all(np.isfinite(arr)):
        raise ValueError("All entries must be finite.")
    return _freeze(arr)


def as_float_matrix(value: Any) -> np.ndarray:
    """Coerce nested sequences to a finite 2-D float64 array."""
    arr = np.array(value, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("Expected a two-dimensional array.")
    if not np.all(np.isfinite(arr)):
        raise ValueError("All entries must be finite.")
    return _freeze(arr)


def as_count_matrix(value: Any) -> np.ndarray:
    """Coerce nested sequences to a 2-D array of nonnegative int64 counts."""
    raw = np.array(value)
    if raw.ndim != 2 or raw.size == 0:
        raise ValueError("Expected a non-empty two-dimensional array.")
    if raw.dtype.kind == "f" and np.any(raw != np.round(raw)):
        raise ValueError("Counts must be integers.")
    arr = raw.astype(np.int64)
    if np.any(arr < 0):
        raise ValueError("Counts must be nonnegative.")
    return _freeze(arr)


def as_bool_matrix(value: Any) -> np.ndarray:
    arr = np.array(value, dtype=bool)
    if arr.ndim != 2:
        raise ValueError("Expected a two-dimensional mask.")
    return _freeze(arr)


def _to_list(arr: np.ndarray) -> list[Any]:
    result: list[Any] = arr.tolist()
    return result


CountArray = Annotated[
    np.ndarray, BeforeValidator(as_count_array), PlainSerializer(_to_list)
]
FloatVector = Annotated[
    np.ndarray, BeforeValidator(as_float_vector), PlainSerializer(_to_list)
]
FloatMatrix = Annotated[
    np.ndarray, BeforeValidator(as_float_matrix), PlainSerializer(_to_list)
]
CountMatrix = Annotated[
    np.ndarray, BeforeValidator(as_count_matrix), PlainSerializer(_to_list)
]
BoolMatrix = Annotated[
    np.ndarray, BeforeValidator(as_bool_matrix), PlainSerializer(_to_list)
]
