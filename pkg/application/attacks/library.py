"""
Built-in attack library and random attack generation.

The swap-type attacks treat the first dim(H_B) ancilla basis vectors as a
photon register with the same Fock enumeration as channel B, so |e_E⟩
(index 0) is the empty register.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

import numpy as np

from core.errors import InvalidParameterError
from core.fock import H1, V1, CompositeSpace, default_space
from core.qmath import ComplexMatrix, identity, random_unitary, tensor
from core.utils.logger import get_logger
from infrastructure.io.attack_file import load_attack_file

from .types import AttackUnitary

logger = get_logger()


class BuiltinAttack(Enum):
    """Names accepted by builtin_attack."""

    IDENTITY = "identity"
    BITFLIP = "bitflip"
    VACUUM_SWAP = "vacuum_swap"
    INTERCEPT = "intercept"
    CUSTOM_FILE = "custom_file"


def _register_index(space: CompositeSpace, ket) -> int:
    if space.e.dim < space.b.dim or space.e.initial_index != 0:
        raise InvalidParameterError(
            f"swap attacks need an ancilla of dimension >= {space.b.dim} "
            f"whose initial state is basis vector 0"
        )
    return space.b.basis_index(ket)


def swap_be(space: CompositeSpace) -> ComplexMatrix:
    """Exchange photon B with the ancilla's photon register."""
    _register_index(space, H1)
    db, de = space.b.dim, space.e.dim
    swap = np.zeros((db * de, db * de), dtype=np.complex128)
    for ib in range(db):
        for ie in range(de):
            if ie < db:
                swap[ie * de + ib, ib * de + ie] = 1.0
            else:
                swap[ib * de + ie, ib * de + ie] = 1.0
    return swap


def bitflip_b(space: CompositeSpace) -> ComplexMatrix:
    """|0^1_B⟩ ↔ |1^1_B⟩, identity on every other ket and on the ancilla."""
    perm = np.arange(space.b.dim)
    h, v = space.b.basis_index(H1), space.b.basis_index(V1)
    perm[h], perm[v] = v, h
    flip = identity(space.b.dim)[:, perm]
    return tensor(flip, identity(space.e.dim))


def plus_preparation(space: CompositeSpace) -> ComplexMatrix:
    """
    Householder reflection on the ancilla exchanging |e_E⟩ with
    (|0^1⟩ + |1^1⟩)/√2 in the photon register.
    """
    empty = space.e.initial_state
    plus = np.zeros(space.e.dim, dtype=np.complex128)
    plus[_register_index(space, V1)] = 1.0 / np.sqrt(2.0)
    plus[_register_index(space, H1)] = 1.0 / np.sqrt(2.0)
    w = empty - plus
    w = w / np.linalg.norm(w)
    return identity(space.e.dim) - 2.0 * np.outer(w, w.conj())


def builtin_attack(
    name: BuiltinAttack | str,
    space: Optional[CompositeSpace] = None,
    path: Optional[Path | str] = None,
) -> AttackUnitary:
    """
    Build a validated attack from the library.

    Args:
        name: Attack name (see BuiltinAttack)
        space: Composite space; defaults to the configured space
        path: Attack file, required for custom_file

    Returns:
        AttackUnitary on H_B ⊗ H_E

    Raises:
        InvalidParameterError: For an unknown name or missing path
        NotUnitaryError: If a custom matrix is not unitary
    """
    try:
        kind = BuiltinAttack(name)
    except ValueError as e:
        names = ", ".join(k.value for k in BuiltinAttack)
        raise InvalidParameterError(f"unknown attack {name!r}; expected one of {names}") from e

    space = space or default_space()
    be = identity(space.be_dim)

    if kind is BuiltinAttack.IDENTITY:
        attack = AttackUnitary(j=be, k=be, name=kind.value)
    elif kind is BuiltinAttack.BITFLIP:
        attack = AttackUnitary(j=bitflip_b(space), k=be, name=kind.value)
    elif kind is BuiltinAttack.VACUUM_SWAP:
        j = swap_be(space)
        attack = AttackUnitary(j=j, k=j.conj().T, name=kind.value)
    elif kind is BuiltinAttack.INTERCEPT:
        swap = swap_be(space)
        j = swap @ tensor(identity(space.b.dim), plus_preparation(space))
        attack = AttackUnitary(j=j, k=swap, name=kind.value)
    else:
        if path is None:
            raise InvalidParameterError("custom_file attack needs a file path")
        matrices = load_attack_file(path)
        attack = AttackUnitary(j=matrices.j, k=matrices.k, name=matrices.name)
        attack.check_space(space)

    logger.debug(f"Built attack {attack.name} on B⊗E of dimension {attack.dim}")
    return attack


def random_attack(
    space: CompositeSpace, rng: np.random.Generator, name: str = "random"
) -> AttackUnitary:
    """Attack with independent Haar-random J and K."""
    return AttackUnitary(
        j=random_unitary(space.be_dim, rng),
        k=random_unitary(space.be_dim, rng),
        name=name,
    )


__all__ = [
    "BuiltinAttack",
    "bitflip_b",
    "builtin_attack",
    "plus_preparation",
    "random_attack",
    "swap_be",
]
