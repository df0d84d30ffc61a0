"""Reading and writing the toolkit's file formats."""

import logging
import re
from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import ValidationError

from shrink_entropy.exceptions import InputFormatError, InvalidInputError
from shrink_entropy.models import CountVector, ExpressionMatrix, MiGraph

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r"[,\s]+")


def _read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Cannot read {path}: {e}")
        raise InputFormatError(str(path), f"cannot read file: {e}") from e


def parse_counts(text: str, source: str = "counts") -> CountVector:
    """Parse integer counts separated by commas, whitespace or newlines.

    Raises
    ------
    InputFormatError
        If a token is not an integer or no token is present.
    InvalidInputError
        If a count is negative.
    """
    tokens = [token for token in _SEPARATORS.split(text.strip()) if token]
    if not tokens:
        raise InputFormatError(source, "no counts found")
    try:
        values = [int(token) for token in tokens]
    except ValueError as e:
        raise InputFormatError(source, f"counts must be integers: {e}") from e
    if any(value < 0 for value in values):
        raise InvalidInputError("read_counts", "counts must be nonnegative")
    return CountVector(counts=values)


def read_counts(path: str | Path) -> CountVector:
    """Read a counts file: one integer per line or comma-separated."""
    return parse_counts(_read_text(path), str(path))


def read_expression_csv(path: str | Path, header: bool = False) -> ExpressionMatrix:
    """Read an expression matrix CSV.

    The first column holds variable names, the remaining columns numeric
    samples. A header row is skipped when ``header`` is true.

    Raises
    ------
    InputFormatError
        If the file cannot be parsed or holds empty, non-numeric or
        non-finite samples.
    InvalidInputError
        If the matrix violates the shape or label requirements.
    """
    try:
        frame = pd.read_csv(
            path, header=0 if header else None, index_col=0, dtype=str
        )
        values = frame.to_numpy(dtype=np.float64)
    except (OSError, ValueError, pd.errors.ParserError) as e:
        logger.error(f"Cannot parse expression matrix {path}: {e}")
        raise InputFormatError(str(path), f"cannot parse expression matrix: {e}") from e
    if not np.all(np.isfinite(values)):
        logger.error(f"Expression matrix {path} has empty or non-finite cells")
        raise InputFormatError(str(path), "empty or non-finite sample values")
    labels = tuple(str(label) for label in frame.index)
    try:
        matrix = ExpressionMatrix(labels=labels, values=values)
    except ValidationError as e:
        raise InvalidInputError("read_expression_csv", str(e)) from e
    logger.info(
        f"Read {matrix.n_variables} variables x {matrix.n_samples} samples from {path}"
    )
    return matrix


def mi_matrix_csv(graph: MiGraph, full: bool = False, precision: int = 6) -> str:
    """Render MI values as CSV.

    ``full`` writes the symmetric ``G x G`` matrix with labels on both axes;
    otherwise one ``source,target,mi`` row per unordered pair in input order.
    Masked-out edges are written as 0.
    """
    weights = graph.surviving_weights
    float_format = f"%.{precision}f"
    if full:
        labels = list(graph.labels)
        frame = pd.DataFrame(weights, index=labels, columns=labels)
        text: str = frame.to_csv(float_format=float_format, lineterminator="\n")
        return text
    rows, cols = np.triu_indices(graph.size, k=1)
    frame = pd.DataFrame(
        {
            "source": [graph.labels[i] for i in rows],
            "target": [graph.labels[j] for j in cols],
            "mi": weights[rows, cols],
        }
    )
    text = frame.to_csv(index=False, float_format=float_format, lineterminator="\n")
    return text
