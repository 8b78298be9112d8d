"""
Exact Holevo quantities of an attack from explicitly evolved density
matrices. Independent of the closed-form p, q route: nothing here reads
the decomposition of J.
"""

from typing import Sequence

from core.fock import BellKind, CompositeSpace, Factor, bell_state, embed_op, z_gate
from core.qmath import (
    ComplexMatrix,
    ComplexVector,
    outer,
    support_compression,
    von_neumann_entropy,
)
from core.utils.logger import get_logger

from .types import AttackUnitary, ExactHolevo

logger = get_logger()


def _conjugate(op: ComplexMatrix, rho: ComplexMatrix) -> ComplexMatrix:
    return op @ rho @ op.conj().T


def _entropy_on(rho: ComplexMatrix, support: Sequence[ComplexVector]) -> float:
    return von_neumann_entropy(support_compression(rho, support))


def exact_holevo(attack: AttackUnitary, space: CompositeSpace) -> ExactHolevo:
    """
    Evaluate I_B:E and I_A:E as Holevo differences of Von Neumann entropies.

    ρ_AB = ½|ψ−⟩⟨ψ−| + ½|ψ+⟩⟨ψ+| is extended by |e_E⟩⟨e_E| and sent through
    K·1_B·J and K·Z_B·J; E(ρ) is their equal mixture. Every density lives in
    the span of the four evolved Bell kets, so entropies are taken on that
    compressed subspace.

    Args:
        attack: Validated attack
        space: Composite space the attack acts on

    Returns:
        ExactHolevo with both informations and the component entropies
    """
    attack.check_space(space)
    j = embed_op(attack.j, Factor.BE, space)
    k = embed_op(attack.k, Factor.BE, space)
    z = embed_op(z_gate(space.b), Factor.B, space)
    keep = k @ j
    flip = k @ z @ j

    psi_minus = bell_state(BellKind.MINUS, space).amplitudes
    psi_plus = bell_state(BellKind.PLUS, space).amplitudes
    rho_minus = outer(psi_minus)
    rho_plus = outer(psi_plus)
    rho = 0.5 * (rho_minus + rho_plus)

    e_identity = _conjugate(keep, rho)
    e_phase = _conjugate(flip, rho)
    e_total = 0.5 * (e_identity + e_phase)
    e_minus = 0.5 * (_conjugate(keep, rho_minus) + _conjugate(flip, rho_minus))
    e_plus = 0.5 * (_conjugate(keep, rho_plus) + _conjugate(flip, rho_plus))

    support = [keep @ psi_minus, keep @ psi_plus, flip @ psi_minus, flip @ psi_plus]

    s_total = _entropy_on(e_total, support)
    s_identity = _entropy_on(e_identity, support)
    s_phase = _entropy_on(e_phase, support)
    s_minus = _entropy_on(e_minus, support)
    s_plus = _entropy_on(e_plus, support)

    result = ExactHolevo(
        i_be=s_total - 0.5 * s_identity - 0.5 * s_phase,
        i_ae=s_total - 0.5 * s_minus - 0.5 * s_plus,
        s_total=s_total,
        s_identity=s_identity,
        s_phase=s_phase,
        s_minus=s_minus,
        s_plus=s_plus,
    )
    logger.debug(
        f"Exact Holevo for {attack.name}: I_B:E={result.i_be:.12f}, I_A:E={result.i_ae:.12f}"
    )
    return result


def full_density(attack: AttackUnitary, space: CompositeSpace) -> ComplexMatrix:
    """E(ρ_AB) on the whole composite space, mainly for inspection and tests."""
    j = embed_op(attack.j, Factor.BE, space)
    k = embed_op(attack.k, Factor.BE, space)
    z = embed_op(z_gate(space.b), Factor.B, space)
    rho = 0.5 * (
        outer(bell_state(BellKind.MINUS, space).amplitudes)
        + outer(bell_state(BellKind.PLUS, space).amplitudes)
    )
    return 0.5 * (_conjugate(k @ j, rho) + _conjugate(k @ z @ j, rho))


__all__ = ["exact_holevo", "full_density"]
