"""
Multi-photon polarization spaces: Fock basis, channel and composite
Hilbert spaces, protocol states, gates and projectors.
"""

from .states import (
    BellKind,
    anticorr_projectors,
    basis_index,
    bell_ab,
    bell_state,
    default_space,
    embed_op,
    z_gate,
)
from .types import (
    H1,
    V1,
    VACUUM,
    AncillaSpace,
    ChannelSpace,
    CompositeSpace,
    Factor,
    FockKet,
    StateVector,
)

__all__ = [
    "H1",
    "V1",
    "VACUUM",
    "AncillaSpace",
    "BellKind",
    "ChannelSpace",
    "CompositeSpace",
    "Factor",
    "FockKet",
    "StateVector",
    "anticorr_projectors",
    "basis_index",
    "bell_ab",
    "bell_state",
    "default_space",
    "embed_op",
    "z_gate",
]
