"""
Eve's individual attacks: unitaries, canonical decomposition, post-attack
states, the built-in library and the exact Holevo oracle.
"""

from .decomposition import decompose_j, eve_params, post_attack_states
from .library import (
    BuiltinAttack,
    bitflip_b,
    builtin_attack,
    plus_preparation,
    random_attack,
    swap_be,
)
from .oracle import exact_holevo, full_density
from .types import AttackMixture, AttackOutcome, AttackUnitary, ExactHolevo, JDecomposition

__all__ = [
    # Types
    "AttackMixture",
    "AttackOutcome",
    "AttackUnitary",
    "BuiltinAttack",
    "ExactHolevo",
    "JDecomposition",
    # Decomposition
    "decompose_j",
    "eve_params",
    "post_attack_states",
    # Library
    "bitflip_b",
    "builtin_attack",
    "plus_preparation",
    "random_attack",
    "swap_be",
    # Oracle
    "exact_holevo",
    "full_density",
]
