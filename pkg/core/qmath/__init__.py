"""
Numeric substrate: dense complex linear algebra, Hermitian
eigendecomposition and entropies.
"""

from .eigen import EigenSpectrum, herm_eig
from .entropy import binary_entropy, shannon_entropy, von_neumann_entropy
from .matrix import (
    HERMITIAN_TOL,
    UNITARY_TOL,
    ComplexMatrix,
    ComplexVector,
    adjoint,
    as_matrix,
    density_from_ensemble,
    identity,
    is_hermitian,
    is_unitary,
    matmul,
    max_asymmetry,
    outer,
    random_hermitian,
    random_unitary,
    support_compression,
    tensor,
    tensor_all,
    unitarity_violation,
)

__all__ = [
    "HERMITIAN_TOL",
    "UNITARY_TOL",
    "ComplexMatrix",
    "ComplexVector",
    "EigenSpectrum",
    "adjoint",
    "as_matrix",
    "binary_entropy",
    "density_from_ensemble",
    "herm_eig",
    "identity",
    "is_hermitian",
    "is_unitary",
    "matmul",
    "max_asymmetry",
    "outer",
    "random_hermitian",
    "random_unitary",
    "shannon_entropy",
    "support_compression",
    "tensor",
    "tensor_all",
    "unitarity_violation",
    "von_neumann_entropy",
]
