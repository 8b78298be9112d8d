"""
Dense complex matrix helpers.

Matrices are numpy complex128 arrays. Tensor products follow the
row-major, left-factor-slow convention used by numpy.kron: in A ⊗ B the
index of A is the most significant one.
"""

from typing import Sequence, Tuple

import numpy as np
import numpy.typing as npt

from core.errors import DimensionMismatchError, InvalidParameterError

ComplexMatrix = npt.NDArray[np.complex128]
ComplexVector = npt.NDArray[np.complex128]

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10


def as_matrix(data) -> ComplexMatrix:
    """
    Convert input to a finite 2-D complex128 array.

    Raises:
        InvalidParameterError: If the data is not 2-D or holds NaN/infinity
    """
    m = np.asarray(data, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise InvalidParameterError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidParameterError("matrix contains NaN or infinite entries")
    return m


def identity(n: int) -> ComplexMatrix:
    return np.eye(n, dtype=np.complex128)


def adjoint(m: ComplexMatrix) -> ComplexMatrix:
    return np.conj(np.asarray(m)).T


def matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """
    Standard matrix product.

    Raises:
        DimensionMismatchError: If a.cols != b.rows (carries both shapes)
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatchError("matmul", a.shape, b.shape)
    return a @ b


def tensor(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product with the left factor as the slow index."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def tensor_all(factors: Sequence[ComplexMatrix]) -> ComplexMatrix:
    result = np.ones((1, 1), dtype=np.complex128)
    for factor in factors:
        result = tensor(result, factor)
    return result


def max_asymmetry(m: ComplexMatrix) -> float:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError("hermiticity check", m.shape, m.shape[::-1])
    return float(np.max(np.abs(m - adjoint(m)))) if m.size else 0.0


def is_hermitian(m: ComplexMatrix, tol: float = HERMITIAN_TOL) -> bool:
    return max_asymmetry(m) <= tol


def unitarity_violation(m: ComplexMatrix) -> Tuple[int, int, float]:
    """
    Locate the worst entry of M†M − I.

    Returns:
        (row, col, deviation) of the entry with the largest absolute deviation
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError("unitarity check", m.shape, m.shape[::-1])
    residual = np.abs(adjoint(m) @ m - identity(m.shape[0]))
    row, col = np.unravel_index(int(np.argmax(residual)), residual.shape)
    return int(row), int(col), float(residual[row, col])


def is_unitary(m: ComplexMatrix, tol: float = UNITARY_TOL) -> bool:
    return unitarity_violation(m)[2] <= tol


def outer(ket: ComplexVector, bra: ComplexVector | None = None) -> ComplexMatrix:
    """|ket⟩⟨bra|, with bra defaulting to ket."""
    ket = np.asarray(ket, dtype=np.complex128)
    bra = ket if bra is None else np.asarray(bra, dtype=np.complex128)
    return np.outer(ket, np.conj(bra))


def density_from_ensemble(
    weights: Sequence[float], kets: Sequence[ComplexVector]
) -> ComplexMatrix:
    """Σ w_i |k_i⟩⟨k_i| for a pure-state ensemble."""
    if len(weights) != len(kets):
        raise DimensionMismatchError("ensemble", (len(weights),), (len(kets),))
    rho = np.zeros((len(kets[0]), len(kets[0])), dtype=np.complex128)
    for weight, ket in zip(weights, kets):
        rho += weight * outer(ket)
    return rho


def support_compression(rho: ComplexMatrix, kets: Sequence[ComplexVector]) -> ComplexMatrix:
    """
    Restrict a density matrix to the span of a set of kets.

    Q is an orthonormal basis (reduced QR) of a space containing the span of
    the kets; Q†ρQ has the same nonzero spectrum as ρ whenever the support of
    ρ lies in that span.

    Args:
        rho: Density matrix on the full space
        kets: Vectors whose span contains the support of rho

    Returns:
        The compressed density matrix of dimension len(kets)
    """
    basis = np.column_stack([np.asarray(k, dtype=np.complex128) for k in kets])
    q, _ = np.linalg.qr(basis, mode="reduced")
    return adjoint(q) @ rho @ q


def random_unitary(n: int, rng: np.random.Generator) -> ComplexMatrix:
    """
    Haar-distributed unitary from the QR decomposition of a complex Gaussian.

    The phases of R's diagonal are moved into Q so the distribution is
    invariant.
    """
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    phases = diag / np.abs(diag)
    return q * phases[np.newaxis, :]


def random_hermitian(n: int, rng: np.random.Generator) -> ComplexMatrix:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (z + adjoint(z)) / 2.0


__all__ = [
    "ComplexMatrix",
    "ComplexVector",
    "HERMITIAN_TOL",
    "UNITARY_TOL",
    "adjoint",
    "as_matrix",
    "density_from_ensemble",
    "identity",
    "is_hermitian",
    "is_unitary",
    "matmul",
    "max_asymmetry",
    "outer",
    "random_hermitian",
    "random_unitary",
    "support_compression",
    "tensor",
    "tensor_all",
    "unitarity_violation",
]
