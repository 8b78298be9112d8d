"""
Type definitions for Eve's individual attacks.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from core.errors import DimensionMismatchError, InvalidParameterError, NotUnitaryError
from core.fock import CompositeSpace, StateVector
from core.qmath import UNITARY_TOL, ComplexMatrix, ComplexVector, unitarity_violation


def _check_unitary(name: str, m: ComplexMatrix) -> ComplexMatrix:
    m = np.array(m, dtype=np.complex128)
    row, col, deviation = unitarity_violation(m)
    if deviation > UNITARY_TOL:
        raise NotUnitaryError(name, row, col, deviation)
    m.setflags(write=False)
    return m


@dataclass(frozen=True, eq=False)
class AttackUnitary:
    """Eve's coupling unitaries J (before Bob) and K (after Bob) on H_B ⊗ H_E."""

    j: ComplexMatrix = field(repr=False)
    k: ComplexMatrix = field(repr=False)
    name: str = "custom"

    def __post_init__(self):
        j = _check_unitary(f"{self.name}.J", self.j)
        k = _check_unitary(f"{self.name}.K", self.k)
        if j.shape != k.shape:
            raise DimensionMismatchError("attack J/K", j.shape, k.shape)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "k", k)

    @property
    def dim(self) -> int:
        return self.j.shape[0]

    def check_space(self, space: CompositeSpace) -> None:
        if self.dim != space.be_dim:
            raise DimensionMismatchError(
                f"attack {self.name} on B⊗E", self.j.shape, (space.be_dim, space.be_dim)
            )

    def with_k(self, k: ComplexMatrix, name: Optional[str] = None) -> "AttackUnitary":
        return AttackUnitary(j=self.j, k=k, name=name or self.name)


@dataclass(frozen=True)
class AttackMixture:
    """Per-round random choice among attacks with fixed weights."""

    components: Tuple[Tuple[float, AttackUnitary], ...]
    name: str = "mixture"

    def __post_init__(self):
        if not self.components:
            raise InvalidParameterError("attack mixture needs at least one component")
        weights = [w for w, _ in self.components]
        if any(w < 0.0 for w in weights) or abs(sum(weights) - 1.0) > 1e-9:
            raise InvalidParameterError(f"mixture weights {weights} must be >= 0 and sum to 1")
        dims = {attack.dim for _, attack in self.components}
        if len(dims) != 1:
            raise InvalidParameterError(f"mixture components act on different spaces: {dims}")

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for w, _ in self.components], dtype=np.float64)

    @property
    def attacks(self) -> Tuple[AttackUnitary, ...]:
        return tuple(a for _, a in self.components)

    @classmethod
    def single(cls, attack: AttackUnitary) -> "AttackMixture":
        return cls(components=((1.0, attack),), name=attack.name)


@dataclass(frozen=True, eq=False)
class JDecomposition:
    """
    J|1^1_B⟩|e⟩ = α|1^1_B⟩|α_E⟩ + γ|Γ_BE⟩ and J|0^1_B⟩|e⟩ = β|0^1_B⟩|β_E⟩ + δ|Δ_BE⟩.

    Amplitudes are taken real and non-negative; the free phases live in
    the normalized states. A state is None when its amplitude vanishes.
    """

    space: CompositeSpace
    alpha: complex
    beta: complex
    gamma: complex
    delta: complex
    alpha_e: Optional[ComplexVector] = field(default=None, repr=False)
    beta_e: Optional[ComplexVector] = field(default=None, repr=False)
    gamma_state: Optional[ComplexVector] = field(default=None, repr=False)
    delta_state: Optional[ComplexVector] = field(default=None, repr=False)


@dataclass(frozen=True, eq=False)
class AttackOutcome:
    """Observables, hidden parameters and final states of one attack."""

    attack_name: str
    p01: float
    p10: float
    c: Optional[float]
    d: Optional[float]
    p: float
    q: float
    decomposition: JDecomposition = field(repr=False)
    mu_minus: StateVector = field(repr=False)
    mu_plus: StateVector = field(repr=False)
    nu_minus: StateVector = field(repr=False)
    nu_plus: StateVector = field(repr=False)

    @property
    def p_anticorr(self) -> float:
        return (self.p01 + self.p10) / 2.0


@dataclass(frozen=True)
class ExactHolevo:
    """Holevo quantities from explicit density matrices, in bits."""

    i_be: float
    i_ae: float
    s_total: float
    s_identity: float
    s_phase: float
    s_minus: float
    s_plus: float


__all__ = ["AttackMixture", "AttackOutcome", "AttackUnitary", "ExactHolevo", "JDecomposition"]
