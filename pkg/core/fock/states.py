"""
Protocol states, gates and projectors on the composite space.
"""

from enum import Enum
from functools import lru_cache
from typing import Tuple

import numpy as np

from config import config
from core.errors import DimensionMismatchError, InvalidParameterError
from core.qmath import ComplexMatrix, identity, tensor, tensor_all

from .types import (
    H1,
    V1,
    AncillaSpace,
    ChannelSpace,
    CompositeSpace,
    Factor,
    FockKet,
    StateVector,
)


class BellKind(Enum):
    """Which of the two anticorrelated Bell states."""

    PLUS = "plus"
    MINUS = "minus"


def basis_index(space: ChannelSpace, ket: FockKet) -> int:
    return space.basis_index(ket)


@lru_cache(maxsize=8)
def default_space(
    a_n_max: int | None = None,
    b_n_max: int | None = None,
    ancilla_dim: int | None = None,
) -> CompositeSpace:
    """Composite space with the configured defaults (A: 1 photon, B: 2, E: 6)."""
    return CompositeSpace(
        a=ChannelSpace("A", config.a_n_max if a_n_max is None else a_n_max),
        b=ChannelSpace("B", config.b_n_max if b_n_max is None else b_n_max),
        e=AncillaSpace(config.ancilla_dim if ancilla_dim is None else ancilla_dim),
    )


def bell_ab(kind: BellKind, space: CompositeSpace) -> np.ndarray:
    """ψ± on H_A ⊗ H_B only, as a flat vector of length dim A · dim B."""
    if space.a.n_max < 1 or space.b.n_max < 1:
        raise InvalidParameterError("Bell states need n_max >= 1 on channels A and B")
    sign = 1.0 if kind is BellKind.PLUS else -1.0
    vec = np.kron(space.a.unit(V1), space.b.unit(H1)) + sign * np.kron(
        space.a.unit(H1), space.b.unit(V1)
    )
    return vec / np.sqrt(2.0)


def bell_state(kind: BellKind, space: CompositeSpace) -> StateVector:
    """
    ψ∓ = (|0^1_A 1^1_B⟩ ∓ |1^1_A 0^1_B⟩)/√2 ⊗ |e_E⟩.

    Args:
        kind: BellKind.PLUS or BellKind.MINUS
        space: Composite space with n_max >= 1 on A and B

    Returns:
        Normalized StateVector
    """
    return StateVector(space, np.kron(bell_ab(kind, space), space.e.initial_state))


def z_gate(space: ChannelSpace) -> ComplexMatrix:
    """Generalized Z: |m^n⟩ → (−1)^m |m^n⟩."""
    return np.diag([(-1.0) ** ket.m for ket in space.basis]).astype(np.complex128)


def embed_op(op: ComplexMatrix, target: Factor, space: CompositeSpace) -> ComplexMatrix:
    """
    Lift an operator on one factor (or on B ⊗ E jointly) to the composite space.

    Raises:
        DimensionMismatchError: If op does not match the target factor
    """
    op = np.asarray(op, dtype=np.complex128)
    expected = space.factor_dim(target)
    if op.shape != (expected, expected):
        raise DimensionMismatchError(f"embed into {target.value}", op.shape, (expected, expected))

    da, db, de = space.dims
    if target is Factor.A:
        return tensor_all([op, identity(db), identity(de)])
    if target is Factor.B:
        return tensor_all([identity(da), op, identity(de)])
    if target is Factor.E:
        return tensor_all([identity(da), identity(db), op])
    return tensor(identity(da), op)


def _ab_projector(space: CompositeSpace, ket_a: FockKet, ket_b: FockKet) -> ComplexMatrix:
    ab = np.kron(space.a.unit(ket_a), space.b.unit(ket_b))
    return tensor(np.outer(ab, ab.conj()), identity(space.e.dim))


def anticorr_projectors(space: CompositeSpace) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """
    Π01 = |0^1_A 1^1_B⟩⟨0^1_A 1^1_B| and Π10 = |1^1_A 0^1_B⟩⟨1^1_A 0^1_B|,
    each tensored with the identity on the ancilla.
    """
    return _ab_projector(space, V1, H1), _ab_projector(space, H1, V1)


__all__ = [
    "BellKind",
    "anticorr_projectors",
    "basis_index",
    "bell_ab",
    "bell_state",
    "default_space",
    "embed_op",
    "z_gate",
]
