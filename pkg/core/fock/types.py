"""
Type definitions for multi-photon polarization spaces.

A channel X with at most n_max photons is spanned by the Fock kets |m^n_X⟩
(n photons, m of them horizontally polarized). The basis is enumerated by
ascending n, then ascending m:

    |0^0⟩, |0^1⟩, |1^1⟩, |0^2⟩, |1^2⟩, |2^2⟩, ...

The composite space is H_A ⊗ H_B ⊗ H_E with A as the slowest index.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Tuple

import numpy as np

from core.errors import DimensionMismatchError, InvalidParameterError
from core.qmath import ComplexMatrix, ComplexVector


class Factor(Enum):
    """Tensor factors of the composite space."""

    A = "A"
    B = "B"
    E = "E"
    BE = "BE"  # Eve's joint action on photon B and her ancilla


@dataclass(frozen=True, order=True)
class FockKet:
    """|m^n⟩: n photons, m horizontally polarized."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.m <= self.n:
            raise InvalidParameterError(f"invalid Fock ket m={self.m}, n={self.n}")

    def __str__(self) -> str:
        return f"|{self.m}^{self.n}⟩"


VACUUM = FockKet(0, 0)
V1 = FockKet(1, 0)  # |0^1⟩, one vertical photon
H1 = FockKet(1, 1)  # |1^1⟩, one horizontal photon


@dataclass(frozen=True)
class ChannelSpace:
    """Hilbert space of a photon channel truncated at n_max photons."""

    label: str
    n_max: int

    def __post_init__(self):
        if self.n_max < 0:
            raise InvalidParameterError(f"n_max must be >= 0, got {self.n_max}")

    @cached_property
    def basis(self) -> Tuple[FockKet, ...]:
        return tuple(FockKet(n, m) for n in range(self.n_max + 1) for m in range(n + 1))

    @property
    def dim(self) -> int:
        return (self.n_max + 1) * (self.n_max + 2) // 2

    def basis_index(self, ket: FockKet) -> int:
        """
        Position of a ket in the basis enumeration.

        Raises:
            InvalidParameterError: If the ket exceeds n_max
        """
        if ket.n > self.n_max:
            raise InvalidParameterError(
                f"{ket} exceeds n_max={self.n_max} of channel {self.label}"
            )
        return ket.n * (ket.n + 1) // 2 + ket.m

    def ket_at(self, index: int) -> FockKet:
        if not 0 <= index < self.dim:
            raise InvalidParameterError(
                f"index {index} outside channel {self.label} of dimension {self.dim}"
            )
        return self.basis[index]

    def unit(self, ket: FockKet) -> ComplexVector:
        vec = np.zeros(self.dim, dtype=np.complex128)
        vec[self.basis_index(ket)] = 1.0
        return vec


@dataclass(frozen=True)
class AncillaSpace:
    """
    Eve's ancilla with initial state |e_E⟩ = basis vector initial_index.

    Indices are 0-based; the default |e_E⟩ is the first basis vector.
    """

    dim: int
    initial_index: int = 0

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidParameterError(f"ancilla dimension must be >= 1, got {self.dim}")
        if not 0 <= self.initial_index < self.dim:
            raise InvalidParameterError(
                f"initial index {self.initial_index} outside ancilla of dimension {self.dim}"
            )

    @property
    def initial_state(self) -> ComplexVector:
        vec = np.zeros(self.dim, dtype=np.complex128)
        vec[self.initial_index] = 1.0
        return vec


@dataclass(frozen=True)
class CompositeSpace:
    """H_A ⊗ H_B ⊗ H_E."""

    a: ChannelSpace
    b: ChannelSpace
    e: AncillaSpace

    @property
    def dims(self) -> Tuple[int, int, int]:
        return self.a.dim, self.b.dim, self.e.dim

    @property
    def dim(self) -> int:
        return self.a.dim * self.b.dim * self.e.dim

    @property
    def be_dim(self) -> int:
        return self.b.dim * self.e.dim

    def factor_dim(self, factor: Factor) -> int:
        return {
            Factor.A: self.a.dim,
            Factor.B: self.b.dim,
            Factor.E: self.e.dim,
            Factor.BE: self.be_dim,
        }[factor]

    def index(self, ia: int, ib: int, ie: int) -> int:
        da, db, de = self.dims
        if not (0 <= ia < da and 0 <= ib < db and 0 <= ie < de):
            raise InvalidParameterError(f"factor indices ({ia}, {ib}, {ie}) out of range")
        return (ia * db + ib) * de + ie

    def split(self, index: int) -> Tuple[int, int, int]:
        if not 0 <= index < self.dim:
            raise InvalidParameterError(f"index {index} outside composite space")
        da, db, de = self.dims
        ia, rest = divmod(index, db * de)
        ib, ie = divmod(rest, de)
        return ia, ib, ie


@dataclass(frozen=True, eq=False)
class StateVector:
    """Pure state on a composite space."""

    space: CompositeSpace
    amplitudes: ComplexVector = field(repr=False)
    normalized: bool = True

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.space.dim,):
            raise DimensionMismatchError("state vector", amps.shape, (self.space.dim,))
        if self.normalized and abs(np.linalg.norm(amps) - 1.0) > 1e-9:
            raise InvalidParameterError(
                f"state norm {np.linalg.norm(amps):.12f} differs from 1"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "StateVector") -> complex:
        """⟨self|other⟩."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def evolve(self, op: ComplexMatrix) -> "StateVector":
        if op.shape != (self.space.dim, self.space.dim):
            raise DimensionMismatchError("evolve", op.shape, (self.space.dim,))
        return StateVector(self.space, op @ self.amplitudes, normalized=False)

    def tensor_view(self) -> np.ndarray:
        """Amplitudes reshaped to (dim A, dim B, dim E)."""
        return self.amplitudes.reshape(self.space.dims)

    def amplitude(self, ket_a: FockKet, ket_b: FockKet, ie: int) -> complex:
        ia = self.space.a.basis_index(ket_a)
        ib = self.space.b.basis_index(ket_b)
        return complex(self.amplitudes[self.space.index(ia, ib, ie)])


__all__ = [
    "H1",
    "V1",
    "VACUUM",
    "AncillaSpace",
    "ChannelSpace",
    "CompositeSpace",
    "Factor",
    "FockKet",
    "StateVector",
]
