"""Custom exceptions for the shrink_entropy package.

Every exception carries the process exit status the command-line interface
reports for it.
"""

# =============================================================================
# Base
# =============================================================================


class ShrinkEntropyError(Exception):
    """Base exception for all toolkit errors."""

    exit_code = 1


# =============================================================================
# Invalid input values
# =============================================================================


class InvalidInputError(ShrinkEntropyError, ValueError):
    """Exception for input values an operation cannot accept."""

    exit_code = 2

    def __init__(self, operation: str, message: str):
        self.operation = operation
        super().__init__(f"{operation}: {message}")


class UnsupportedEstimatorError(InvalidInputError):
    """Exception for an estimator or format not supported by an operation."""

    def __init__(self, operation: str, name: str):
        self.name = name
        super().__init__(operation, f"unsupported estimator or format '{name}'")


# =============================================================================
# Input files
# =============================================================================


class InputFormatError(ShrinkEntropyError):
    """Exception for unreadable or malformed input files."""

    exit_code = 3

    def __init__(self, source: str, message: str):
        self.source = source
        super().__init__(f"{source}: {message}")


# =============================================================================
# Numeric domain
# =============================================================================


class NumericDomainError(ShrinkEntropyError):
    """Exception for inputs outside the numeric domain of a formula."""

    exit_code = 4

    def __init__(self, operation: str, message: str, value: float | None = None):
        self.operation = operation
        self.value = value
        super().__init__(f"{operation}: {message}")


class DegenerateDataError(NumericDomainError):
    """Exception for data without spread, e.g. a zero interquartile range."""

    def __init__(self, operation: str, iqr: float):
        super().__init__(
            operation,
            f"interquartile range is {iqr}; cannot derive a bin width",
            value=iqr,
        )


class UnrepresentableError(NumericDomainError):
    """Exception for a shrinkage intensity without a finite prior mass."""

    def __init__(self, operation: str, lam: float):
        super().__init__(
            operation,
            f"intensity {lam} has no finite equivalent prior mass",
            value=lam,
        )
