"""
Born-rule measurements of the Anticorrelation Check and of Alice's Bell
analysis, plus exact outcome distributions used by the session and by the
analytic error rates.
"""

from typing import Dict, Sequence, Tuple, TypeVar

import numpy as np

from application.attacks import AttackMixture, AttackUnitary
from core.errors import InvalidParameterError
from core.fock import (
    H1,
    V1,
    BellKind,
    CompositeSpace,
    Factor,
    StateVector,
    bell_ab,
    bell_state,
    embed_op,
    z_gate,
)
from core.qmath import ComplexMatrix

from .types import BellOutcome, CheckOutcome

NORM_TOL = 1e-6

T = TypeVar("T")


def _require_normalized(state: StateVector) -> None:
    norm = state.norm()
    if abs(norm - 1.0) > NORM_TOL:
        raise InvalidParameterError(f"state norm {norm:.9f} deviates from 1 by more than 1e-6")


def _finish(probs: Dict[T, float], remainder_key: T) -> Dict[T, float]:
    probs[remainder_key] = max(0.0, 1.0 - sum(probs.values()))
    return probs


def check_probabilities(state: StateVector) -> Dict[CheckOutcome, float]:
    """Four-class distribution of the check on a state after J."""
    _require_normalized(state)
    space = state.space
    weights = np.sum(np.abs(state.tensor_view()) ** 2, axis=2)
    a_v, a_h = space.a.basis_index(V1), space.a.basis_index(H1)
    b_v, b_h = space.b.basis_index(V1), space.b.basis_index(H1)

    probs = {
        CheckOutcome.ANTICORR_01: float(weights[a_v, b_h]),
        CheckOutcome.ANTICORR_10: float(weights[a_h, b_v]),
        CheckOutcome.CORRELATED: float(weights[a_v, b_v] + weights[a_h, b_h]),
    }
    return _finish(probs, CheckOutcome.WRONG_OTHER)


def bell_probabilities(state: StateVector) -> Dict[BellOutcome, float]:
    """ψ± probabilities with the ancilla summed out; fail takes the rest."""
    _require_normalized(state)
    space = state.space
    ab_by_e = state.amplitudes.reshape(space.a.dim * space.b.dim, space.e.dim)
    probs = {}
    for kind, outcome in ((BellKind.PLUS, BellOutcome.PSI_PLUS), (BellKind.MINUS, BellOutcome.PSI_MINUS)):
        overlap = bell_ab(kind, space).conj() @ ab_by_e
        probs[outcome] = float(np.vdot(overlap, overlap).real)
    return _finish(probs, BellOutcome.FAIL)


def sample_outcome(outcomes: Sequence[T], cumulative: np.ndarray, u: float) -> T:
    """Pick the outcome whose cumulative-probability bin contains u ∈ [0, 1)."""
    index = int(np.searchsorted(cumulative, u, side="right"))
    return outcomes[min(index, len(outcomes) - 1)]


def _sample(probs: Dict[T, float], rng: np.random.Generator) -> T:
    outcomes = list(probs)
    cumulative = np.cumsum([probs[o] for o in outcomes])
    return sample_outcome(outcomes, cumulative, float(rng.random()))


def measure_check(state: StateVector, rng: np.random.Generator) -> CheckOutcome:
    """
    Sample one check outcome.

    Raises:
        InvalidParameterError: If the state norm deviates from 1 by more than 1e-6
    """
    return _sample(check_probabilities(state), rng)


def measure_bell(state: StateVector, rng: np.random.Generator) -> BellOutcome:
    """
    Sample one Bell-analysis outcome.

    Raises:
        InvalidParameterError: If the state norm deviates from 1 by more than 1e-6
    """
    return _sample(bell_probabilities(state), rng)


class RoundOperators:
    """Embedded J, K and Z_B of one attack with the two prepared states."""

    def __init__(self, attack: AttackUnitary, space: CompositeSpace):
        attack.check_space(space)
        self.space = space
        self.j: ComplexMatrix = embed_op(attack.j, Factor.BE, space)
        self.k: ComplexMatrix = embed_op(attack.k, Factor.BE, space)
        self.z: ComplexMatrix = embed_op(z_gate(space.b), Factor.B, space)
        singlet = bell_state(BellKind.MINUS, space)
        self._prepared = (singlet, singlet.evolve(self.z))

    def prepared(self, alice_bit: int) -> StateVector:
        """Z_B^a ψ− ⊗ |e_E⟩."""
        return self._prepared[alice_bit]

    def after_eve(self, alice_bit: int) -> StateVector:
        return self.prepared(alice_bit).evolve(self.j)

    def returned(self, alice_bit: int, bob_bit: int) -> StateVector:
        state = self.after_eve(alice_bit)
        if bob_bit:
            state = state.evolve(self.z)
        return state.evolve(self.k)


def outcome_tables(
    attack: AttackUnitary, space: CompositeSpace
) -> Tuple[Dict[int, Dict[CheckOutcome, float]], Dict[Tuple[int, int], Dict[BellOutcome, float]]]:
    """Check distributions per Alice bit and Bell distributions per (Alice, Bob) bits."""
    ops = RoundOperators(attack, space)
    checks = {a: check_probabilities(ops.after_eve(a)) for a in (0, 1)}
    bells = {(a, b): bell_probabilities(ops.returned(a, b)) for a in (0, 1) for b in (0, 1)}
    return checks, bells


def _error_terms(
    bells: Dict[Tuple[int, int], Dict[BellOutcome, float]], fails_as_errors: bool
) -> Tuple[float, float]:
    wrong, comparable = 0.0, 0.0
    for (a, b), probs in bells.items():
        right = BellOutcome.PSI_PLUS if a ^ b else BellOutcome.PSI_MINUS
        wrong_outcome = BellOutcome.PSI_MINUS if a ^ b else BellOutcome.PSI_PLUS
        fail = probs[BellOutcome.FAIL]
        wrong += 0.25 * (probs[wrong_outcome] + (fail if fails_as_errors else 0.0))
        comparable += 0.25 * (probs[right] + probs[wrong_outcome] + (fail if fails_as_errors else 0.0))
    return wrong, comparable


def expected_error_rate(
    attack: AttackMixture | AttackUnitary,
    space: CompositeSpace,
    fails_as_errors: bool = True,
) -> float:
    """
    Exact rate of wrong sacrificed rounds for uniformly random bits.

    With fails_as_errors=False, fails leave both numerator and denominator,
    so the rate is conditional on a non-fail Bell outcome.

    Raises:
        InvalidParameterError: If no outcome is comparable (all rounds fail)
    """
    mixture = attack if isinstance(attack, AttackMixture) else AttackMixture.single(attack)
    wrong, comparable = 0.0, 0.0
    for weight, component in mixture.components:
        _, bells = outcome_tables(component, space)
        w, c = _error_terms(bells, fails_as_errors)
        wrong += weight * w
        comparable += weight * c
    if comparable <= 0.0:
        raise InvalidParameterError("every Bell analysis fails; no error rate is defined")
    return wrong / comparable


__all__ = [
    "RoundOperators",
    "bell_probabilities",
    "check_probabilities",
    "expected_error_rate",
    "measure_bell",
    "measure_check",
    "outcome_tables",
    "sample_outcome",
]
