"""
Hermitian eigendecomposition by cyclic Jacobi rotations.

Each rotation annihilates one off-diagonal pair (p, q): the phase of
a_pq is first moved onto column q, then a real Jacobi rotation zeroes the
now-real entry. Rotations are applied to whole rows/columns with numpy.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt

from core.errors import ConvergenceError, NotHermitianError
from core.utils.logger import get_logger

from .matrix import ComplexMatrix, adjoint, as_matrix, max_asymmetry

logger = get_logger()

HERMITIAN_INPUT_TOL = 1e-10
OFF_DIAGONAL_TOL = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True)
class EigenSpectrum:
    """Eigenvalues sorted ascending, eigenvectors as matching columns."""

    values: npt.NDArray[np.float64]
    vectors: Optional[ComplexMatrix] = None

    def reconstruct(self) -> ComplexMatrix:
        if self.vectors is None:
            raise ValueError("spectrum was computed without eigenvectors")
        return (self.vectors * self.values[np.newaxis, :]) @ adjoint(self.vectors)


def _off_norm(a: ComplexMatrix) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _rotation(a: ComplexMatrix, p: int, q: int) -> Optional[ComplexMatrix]:
    """2x2 unitary block G with (G† A G)_pq = 0, or None if already zero."""
    apq = a[p, q]
    magnitude = abs(apq)
    if magnitude == 0.0:
        return None
    phase = apq / magnitude
    theta = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta == 0.0:
        t = 1.0
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    conj_phase = np.conj(phase)
    return np.array([[c, s], [-s * conj_phase, c * conj_phase]], dtype=np.complex128)


def herm_eig(m: ComplexMatrix, with_vectors: bool = True) -> EigenSpectrum:
    """
    Full spectrum of a Hermitian matrix via cyclic Jacobi sweeps.

    Args:
        m: Hermitian matrix (within 1e-10)
        with_vectors: Accumulate eigenvectors

    Returns:
        EigenSpectrum with ascending real eigenvalues

    Raises:
        NotHermitianError: If the input is not Hermitian within 1e-10
        ConvergenceError: If the off-diagonal norm is not reduced below
            1e-12 within 100 sweeps
    """
    m = as_matrix(m)
    asymmetry = max_asymmetry(m)
    if asymmetry > HERMITIAN_INPUT_TOL:
        raise NotHermitianError(asymmetry, HERMITIAN_INPUT_TOL)

    n = m.shape[0]
    a = (m + adjoint(m)) / 2.0
    v = np.eye(n, dtype=np.complex128) if with_vectors else None

    sweeps = 0
    while _off_norm(a) >= OFF_DIAGONAL_TOL:
        if sweeps == MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi eigensolver did not converge after {MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {_off_norm(a):.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = _rotation(a, p, q)
                if g is None:
                    continue
                cols = [p, q]
                a[:, cols] = a[:, cols] @ g
                a[cols, :] = adjoint(g) @ a[cols, :]
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if v is not None:
                    v[:, cols] = v[:, cols] @ g
        sweeps += 1

    values = np.real(np.diag(a)).copy()
    order = np.argsort(values, kind="stable")
    logger.debug(f"Jacobi converged in {sweeps} sweeps for dimension {n}")
    return EigenSpectrum(
        values=values[order],
        vectors=v[:, order] if v is not None else None,
    )


__all__ = ["EigenSpectrum", "herm_eig"]
