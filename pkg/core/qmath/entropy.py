"""
Entropy functions in bits.

scipy.special.entr supplies −x·ln(x) with the 0·log 0 = 0 convention.
"""

from typing import Sequence

import numpy as np
from scipy.special import entr

from core.errors import InvalidParameterError
from core.utils.logger import get_logger

from .eigen import herm_eig
from .matrix import ComplexMatrix, as_matrix

logger = get_logger()

LN2 = float(np.log(2.0))
TRACE_TOL = 1e-6
NEGATIVE_EIGENVALUE_TOL = 1e-10
BINARY_DOMAIN_TOL = 1e-12


def shannon_entropy(probs: Sequence[float]) -> float:
    """−Σ p log2 p over a probability vector."""
    p = np.asarray(probs, dtype=np.float64)
    return float(np.sum(entr(p)) / LN2)


def binary_entropy(x: float) -> float:
    """
    Shannon entropy of a binary channel, H(x) = −x log2 x − (1−x) log2 (1−x).

    Raises:
        InvalidParameterError: If x lies outside [0, 1] by more than 1e-12
    """
    if x < -BINARY_DOMAIN_TOL or x > 1.0 + BINARY_DOMAIN_TOL:
        raise InvalidParameterError(f"binary entropy argument {x!r} outside [0, 1]")
    x = min(max(float(x), 0.0), 1.0)
    return float((entr(x) + entr(1.0 - x)) / LN2)


def von_neumann_entropy(rho: ComplexMatrix) -> float:
    """
    S(ρ) = −Σ λ log2 λ over the spectrum of a density matrix.

    Eigenvalues in [−1e-10, 0) are rounding noise and count as zero.

    Raises:
        InvalidParameterError: If the trace deviates from 1 by more than 1e-6
            or an eigenvalue is more negative than −1e-10
    """
    rho = as_matrix(rho)
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > TRACE_TOL:
        raise InvalidParameterError(f"density matrix trace {trace.real:.9f} is not 1")

    values = herm_eig(rho, with_vectors=False).values
    if values[0] < -NEGATIVE_EIGENVALUE_TOL:
        raise InvalidParameterError(
            f"density matrix has negative eigenvalue {values[0]:.3e}"
        )
    clamped = np.where(values < 0.0, 0.0, values)
    return shannon_entropy(clamped)


__all__ = ["binary_entropy", "shannon_entropy", "von_neumann_entropy"]
