"""
Bit recovery from encode rounds and QBER estimation on sacrificed rounds.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from application.bounds import SecurityVerdict
from core.errors import ProtocolError, SessionAbortedError
from core.utils.logger import get_logger

from .types import ProtocolMode, RoundKind, RoundRecord

logger = get_logger()


@dataclass(frozen=True)
class DecodeResult:
    """
    Bits recovered by the receiving party.

    ciphertext is the public XOR stream, set only in alice_to_bob mode.
    dropped_indices are the round indices lost to Bell-analysis fails.
    """

    bits: Tuple[int, ...]
    dropped_indices: Tuple[int, ...]
    ciphertext: Optional[Tuple[int, ...]] = None


def payload_rounds(records: Iterable[RoundRecord]) -> List[RoundRecord]:
    """Encode rounds that carry a key or message bit, in payload order."""
    rounds = [
        r
        for r in records
        if r.kind is RoundKind.ENCODE and not r.sacrificed and r.payload_index is not None
    ]
    return sorted(rounds, key=lambda r: r.payload_index)


def decode(
    records: Iterable[RoundRecord], mode: ProtocolMode, verdict: SecurityVerdict
) -> DecodeResult:
    """
    Recover the transmitted bits once the session is known to be secure.

    random_key and bob_to_alice: Alice computes Bob's bit as XOR ⊕ her bit.
    alice_to_bob: the XOR stream is disclosed and Bob computes Alice's bit
    as XOR ⊕ his key bit.

    Raises:
        SessionAbortedError: If the verdict is insecure
    """
    if not verdict.secure:
        raise SessionAbortedError(f"decoding refused on an insecure session: {verdict.reason}")

    bits: List[int] = []
    dropped: List[int] = []
    ciphertext: List[int] = []
    for record in payload_rounds(records):
        xor = record.xor_bit
        if xor is None:
            dropped.append(record.index)
            continue
        if mode is ProtocolMode.ALICE_TO_BOB:
            ciphertext.append(xor)
            bits.append(xor ^ record.bob_bit)
        else:
            bits.append(xor ^ record.alice_bit)

    if dropped:
        logger.warning(f"Dropped {len(dropped)} payload rounds with failed Bell analysis")
    return DecodeResult(
        bits=tuple(bits),
        dropped_indices=tuple(dropped),
        ciphertext=tuple(ciphertext) if mode is ProtocolMode.ALICE_TO_BOB else None,
    )


def qber_counts(records: Iterable[RoundRecord], fails_as_errors: bool = True) -> Tuple[int, int]:
    """(errors, comparable rounds) over sacrificed encode rounds."""
    errors, comparable = 0, 0
    for record in records:
        if record.kind is not RoundKind.ENCODE or not record.sacrificed:
            continue
        xor = record.xor_bit
        if xor is None:
            if fails_as_errors:
                errors += 1
                comparable += 1
            continue
        comparable += 1
        if xor != record.alice_bit ^ record.bob_bit:
            errors += 1
    return errors, comparable


def estimate_qber(records: Iterable[RoundRecord], *, fails_as_errors: bool = True) -> float:
    """
    Fraction of sacrificed encode rounds where Alice's decoded bit differs
    from Bob's encoded bit.

    Raises:
        ProtocolError: If no sacrificed round is comparable
    """
    errors, comparable = qber_counts(records, fails_as_errors)
    if comparable == 0:
        raise ProtocolError("no sacrificed rounds to compare; QBER is undefined")
    return errors / comparable


def effective_qber(raw: float, fails_as_errors: bool = True) -> float:
    """
    Map a raw error rate into [0, 0.5] for the security condition.

    Counted fails cannot be undone by inverting bits, so those rates are
    capped at 0.5; otherwise the parties flip their bits above 0.5.
    """
    if fails_as_errors:
        return min(raw, 0.5)
    return min(raw, 1.0 - raw)


__all__ = [
    "DecodeResult",
    "decode",
    "effective_qber",
    "estimate_qber",
    "payload_rounds",
    "qber_counts",
]
