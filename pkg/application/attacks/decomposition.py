"""
Canonical decomposition of Eve's coupling J and extraction of the attack's
observable (P01, P10) and hidden (c, d, p, q) parameters.
"""

from typing import Optional, Tuple

import numpy as np

from core.errors import ConsistencyError
from core.fock import (
    H1,
    V1,
    BellKind,
    CompositeSpace,
    Factor,
    StateVector,
    anticorr_projectors,
    bell_state,
    embed_op,
    z_gate,
)
from core.qmath import ComplexVector, identity, tensor
from core.utils.logger import get_logger

from .types import AttackOutcome, AttackUnitary, JDecomposition

logger = get_logger()

AMPLITUDE_EPS = 1e-12
CONSISTENCY_TOL = 1e-9


def _split_image(
    image: ComplexVector, space: CompositeSpace, kept_index: int
) -> Tuple[float, Optional[ComplexVector], float, Optional[ComplexVector]]:
    """Split a B⊗E vector into its |kept⟩_B ⊗ (ancilla) part and the rest."""
    grid = image.reshape(space.b.dim, space.e.dim)
    ancilla = grid[kept_index].copy()
    remainder = grid.copy()
    remainder[kept_index] = 0.0
    remainder = remainder.reshape(-1)

    amp = float(np.linalg.norm(ancilla))
    rest = float(np.linalg.norm(remainder))
    ancilla_state = ancilla / amp if amp > AMPLITUDE_EPS else None
    rest_state = remainder / rest if rest > AMPLITUDE_EPS else None
    return amp, ancilla_state, rest, rest_state


def decompose_j(attack: AttackUnitary, space: CompositeSpace) -> JDecomposition:
    """
    Decompose J's action on the single-photon inputs.

    Args:
        attack: Attack whose J is decomposed (validated unitary)
        space: Composite space the attack acts on

    Returns:
        JDecomposition with non-negative real amplitudes
    """
    attack.check_space(space)
    e = space.e.initial_state
    h_index = space.b.basis_index(H1)
    v_index = space.b.basis_index(V1)

    image_h = attack.j @ np.kron(space.b.unit(H1), e)
    image_v = attack.j @ np.kron(space.b.unit(V1), e)

    alpha, alpha_e, gamma, gamma_state = _split_image(image_h, space, h_index)
    beta, beta_e, delta, delta_state = _split_image(image_v, space, v_index)
    logger.debug(
        f"Decomposed J of {attack.name}: |α|={alpha:.6f}, |β|={beta:.6f}, "
        f"|γ|={gamma:.6f}, |δ|={delta:.6f}"
    )
    return JDecomposition(
        space=space,
        alpha=complex(alpha),
        beta=complex(beta),
        gamma=complex(gamma),
        delta=complex(delta),
        alpha_e=alpha_e,
        beta_e=beta_e,
        gamma_state=gamma_state,
        delta_state=delta_state,
    )


def eve_params(dec: JDecomposition) -> Tuple[Optional[float], Optional[float]]:
    """
    c = ⟨Γ|Z_B|Γ⟩ and d = ⟨Δ|Z_B|Δ⟩.

    Returns:
        (c, d), each None when the corresponding amplitude vanishes
    """
    z_be = tensor(z_gate(dec.space.b), identity(dec.space.e.dim))

    def expectation(state: Optional[ComplexVector]) -> Optional[float]:
        if state is None:
            return None
        value = complex(np.vdot(state, z_be @ state))
        return float(np.clip(value.real, -1.0, 1.0))

    return expectation(dec.gamma_state), expectation(dec.delta_state)


def _real_overlap(left: StateVector, right: StateVector, label: str) -> float:
    value = left.inner(right)
    if abs(value.imag) >= CONSISTENCY_TOL:
        raise ConsistencyError(
            f"{label} has imaginary part {value.imag:.3e}; the attack unitaries are broken"
        )
    return value.real


def post_attack_states(attack: AttackUnitary, space: CompositeSpace) -> AttackOutcome:
    """
    Final states μ±, ν± and the parameters P01, P10, c, d, p, q.

    P01 and P10 come from the anticorrelation projectors on the J-evolved
    state and are cross-checked against |α|²/2 and |β|²/2. p and q come from
    inner products and are cross-checked against their mirror overlaps.

    Raises:
        ConsistencyError: If any cross-check fails
    """
    attack.check_space(space)
    j_full = embed_op(attack.j, Factor.BE, space)
    k_full = embed_op(attack.k, Factor.BE, space)
    z_full = embed_op(z_gate(space.b), Factor.B, space)

    psi_minus = bell_state(BellKind.MINUS, space)
    psi_plus = bell_state(BellKind.PLUS, space)
    j_minus = psi_minus.evolve(j_full)
    j_plus = psi_plus.evolve(j_full)

    mu_minus = j_minus.evolve(k_full)
    mu_plus = j_plus.evolve(k_full)
    nu_minus = j_minus.evolve(k_full @ z_full)
    nu_plus = j_plus.evolve(k_full @ z_full)

    pi01, pi10 = anticorr_projectors(space)

    def expectation(op, state: StateVector) -> float:
        return float(np.vdot(state.amplitudes, op @ state.amplitudes).real)

    p01 = 0.5 * (expectation(pi01, j_minus) + expectation(pi01, j_plus))
    p10 = 0.5 * (expectation(pi10, j_minus) + expectation(pi10, j_plus))

    dec = decompose_j(attack, space)
    if abs(p01 - abs(dec.alpha) ** 2 / 2.0) > CONSISTENCY_TOL:
        raise ConsistencyError(f"P01={p01!r} disagrees with |α|²/2={abs(dec.alpha) ** 2 / 2!r}")
    if abs(p10 - abs(dec.beta) ** 2 / 2.0) > CONSISTENCY_TOL:
        raise ConsistencyError(f"P10={p10!r} disagrees with |β|²/2={abs(dec.beta) ** 2 / 2!r}")

    p = _real_overlap(mu_plus, nu_minus, "⟨μ+|ν−⟩")
    q = _real_overlap(mu_plus, nu_plus, "⟨μ+|ν+⟩")
    p_mirror = _real_overlap(mu_minus, nu_plus, "⟨μ−|ν+⟩")
    q_mirror = _real_overlap(mu_minus, nu_minus, "⟨μ−|ν−⟩")
    if abs(p - p_mirror) > CONSISTENCY_TOL or abs(q - q_mirror) > CONSISTENCY_TOL:
        raise ConsistencyError(
            f"overlap symmetry broken: p={p!r} vs {p_mirror!r}, q={q!r} vs {q_mirror!r}"
        )

    c, d = eve_params(dec)
    logger.debug(
        f"Attack {attack.name}: P01={p01:.6f}, P10={p10:.6f}, c={c}, d={d}, p={p:.6f}, q={q:.6f}"
    )
    return AttackOutcome(
        attack_name=attack.name,
        p01=p01,
        p10=p10,
        c=c,
        d=d,
        p=p,
        q=q,
        decomposition=dec,
        mu_minus=mu_minus,
        mu_plus=mu_plus,
        nu_minus=nu_minus,
        nu_plus=nu_plus,
    )


__all__ = ["decompose_j", "eve_params", "post_attack_states"]
