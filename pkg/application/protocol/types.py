"""
Type definitions for protocol sessions.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from application.attacks import AttackMixture, AttackUnitary
from application.bounds import SecurityVerdict
from config import config
from core.errors import InvalidParameterError
from core.fock import CompositeSpace


class ProtocolMode(Enum):
    """What the payload rounds carry."""

    RANDOM_KEY = "random_key"
    BOB_TO_ALICE = "bob_to_alice"
    ALICE_TO_BOB = "alice_to_bob"

    @property
    def deterministic(self) -> bool:
        return self is not ProtocolMode.RANDOM_KEY


class RoundKind(Enum):
    CHECK = "check"
    ENCODE = "encode"


class CheckOutcome(Enum):
    """Coincidence classes of the Anticorrelation Check."""

    ANTICORR_01 = "anticorr_01"  # A = |0^1⟩, B = |1^1⟩
    ANTICORR_10 = "anticorr_10"  # A = |1^1⟩, B = |0^1⟩
    CORRELATED = "correlated"
    WRONG_OTHER = "wrong_other"  # vacuum, multi-photon or single-detector events


class BellOutcome(Enum):
    """Result of Alice's incomplete Bell analysis."""

    PSI_PLUS = "psi_plus"
    PSI_MINUS = "psi_minus"
    FAIL = "fail"

    @property
    def xor_bit(self) -> Optional[int]:
        if self is BellOutcome.PSI_PLUS:
            return 1
        if self is BellOutcome.PSI_MINUS:
            return 0
        return None


def _check_bits(name: str, bits: Tuple[int, ...]) -> None:
    bad = [b for b in bits if b not in (0, 1)]
    if bad:
        raise InvalidParameterError(f"{name} must contain only 0 and 1, found {bad[0]!r}")


@dataclass(frozen=True)
class ProtocolConfig:
    """Parameters of one simulated session."""

    rounds: int
    attack: AttackMixture | AttackUnitary
    seed: int = field(default_factory=lambda: config.seed)
    mode: ProtocolMode = ProtocolMode.RANDOM_KEY
    message: Optional[Tuple[int, ...]] = None
    check_probability: float = field(default_factory=lambda: config.check_probability)
    sacrifice_fraction: float = field(default_factory=lambda: config.sacrifice_fraction)
    fails_as_errors: bool = True
    abort_interval: int = field(default_factory=lambda: config.abort_interval)
    space: Optional[CompositeSpace] = None

    def __post_init__(self):
        if isinstance(self.attack, AttackUnitary):
            object.__setattr__(self, "attack", AttackMixture.single(self.attack))
        if self.message is not None:
            object.__setattr__(self, "message", tuple(int(b) for b in self.message))

        if self.rounds < 1:
            raise InvalidParameterError(f"rounds must be positive, got {self.rounds}")
        if self.seed < 0:
            raise InvalidParameterError(f"seed must be non-negative, got {self.seed}")
        if not 0.0 < self.check_probability < 1.0:
            raise InvalidParameterError(
                f"check probability {self.check_probability!r} outside (0, 1)"
            )
        if not 0.0 < self.sacrifice_fraction < 1.0:
            raise InvalidParameterError(
                f"sacrifice fraction {self.sacrifice_fraction!r} outside (0, 1)"
            )
        if self.abort_interval < 1:
            raise InvalidParameterError(
                f"abort interval must be positive, got {self.abort_interval}"
            )

        if self.mode.deterministic:
            if not self.message:
                raise InvalidParameterError(f"mode {self.mode.value} needs a message")
            _check_bits("message", self.message)
            if len(self.message) > self.expected_payload_rounds:
                raise InvalidParameterError(
                    f"message of {len(self.message)} bits exceeds the "
                    f"{self.expected_payload_rounds:.0f} payload rounds expected "
                    f"from {self.rounds} rounds"
                )

    @property
    def expected_payload_rounds(self) -> float:
        return self.rounds * (1.0 - self.check_probability) * (1.0 - self.sacrifice_fraction)


@dataclass(frozen=True)
class RoundRecord:
    """
    One protocol round.

    Check rounds carry check_outcome only; encode rounds carry bob_bit and
    bell_outcome. payload_index is the position in the key or message the
    round contributes to, None for checks, sacrificed rounds and filler.
    """

    index: int
    kind: RoundKind
    alice_bit: int
    bob_bit: Optional[int] = None
    check_outcome: Optional[CheckOutcome] = None
    bell_outcome: Optional[BellOutcome] = None
    sacrificed: bool = False
    payload_index: Optional[int] = None
    attack_index: int = 0

    @property
    def xor_bit(self) -> Optional[int]:
        return None if self.bell_outcome is None else self.bell_outcome.xor_bit


def bit_string(bits) -> str:
    return "".join(str(b) for b in bits)


@dataclass(frozen=True)
class SessionReport:
    """
    Aggregated result of a session.

    exposed_bits counts the bob_to_alice message bits sent before the session
    was aborted, and is 0 for sessions that end secure.
    """

    mode: ProtocolMode
    seed: int
    rounds_requested: int
    rounds_executed: int
    counts: Dict[str, int]
    p01_hat: float
    p10_hat: float
    qber_hat: float
    verdict: SecurityVerdict
    i_be_max: float
    i_ae_max: float
    aborted: bool
    alice_key: Tuple[int, ...] = ()
    bob_key: Tuple[int, ...] = ()
    decoded_message: Optional[Tuple[int, ...]] = None
    ciphertext: Optional[Tuple[int, ...]] = None
    dropped_indices: Tuple[int, ...] = ()
    exposed_bits: int = 0
    records: Tuple[RoundRecord, ...] = field(default=(), repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "seed": self.seed,
            "rounds_requested": self.rounds_requested,
            "rounds_executed": self.rounds_executed,
            "counts": dict(self.counts),
            "p01_hat": self.p01_hat,
            "p10_hat": self.p10_hat,
            "qber_hat": self.qber_hat,
            "i_be_max": self.i_be_max,
            "i_ae_max": self.i_ae_max,
            "verdict": self.verdict.to_dict(),
            "aborted": self.aborted,
            "alice_key": bit_string(self.alice_key),
            "bob_key": bit_string(self.bob_key),
            "decoded_message": (
                None if self.decoded_message is None else bit_string(self.decoded_message)
            ),
            "ciphertext": None if self.ciphertext is None else bit_string(self.ciphertext),
            "dropped_indices": list(self.dropped_indices),
            "exposed_bits": self.exposed_bits,
        }


__all__ = [
    "BellOutcome",
    "CheckOutcome",
    "ProtocolConfig",
    "ProtocolMode",
    "RoundKind",
    "RoundRecord",
    "SessionReport",
    "bit_string",
]
