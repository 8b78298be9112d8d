"""
Exception hierarchy for the laboratory.

Every error derives from LabError and from the closest builtin exception,
so callers may catch either one.
"""

from typing import Optional, Tuple


class LabError(Exception):
    """Base class for all laboratory errors."""


class DimensionMismatchError(LabError, ValueError):
    """Operand shapes are incompatible."""

    def __init__(self, operation: str, left: Tuple[int, ...], right: Tuple[int, ...]):
        self.operation = operation
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__(f"{operation}: incompatible shapes {self.left} and {self.right}")


class NotHermitianError(LabError, ValueError):
    """Matrix is not Hermitian within tolerance."""

    def __init__(self, max_asymmetry: float, tolerance: float):
        self.max_asymmetry = max_asymmetry
        self.tolerance = tolerance
        super().__init__(
            f"matrix is not Hermitian: max |M - M^dagger| = {max_asymmetry:.3e} "
            f"exceeds {tolerance:.1e}"
        )


class NotUnitaryError(LabError, ValueError):
    """Matrix is not unitary within tolerance."""

    def __init__(self, name: str, row: int, col: int, deviation: float):
        self.name = name
        self.row = row
        self.col = col
        self.deviation = deviation
        super().__init__(
            f"{name} is not unitary: worst entry of M^dagger M - I at "
            f"({row}, {col}) deviates by {deviation:.3e}"
        )


class ConvergenceError(LabError, RuntimeError):
    """Iterative algorithm did not converge."""


class InvalidParameterError(LabError, ValueError):
    """Parameter outside its physical or declared domain."""


class ConsistencyError(LabError, RuntimeError):
    """Two computation routes that must agree do not."""


class AttackFileError(LabError, ValueError):
    """Malformed custom attack file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ProtocolError(LabError, RuntimeError):
    """Protocol session cannot proceed as configured."""


class SessionAbortedError(ProtocolError):
    """Disclosure or decoding requested on an insecure session."""
