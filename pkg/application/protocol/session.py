"""
Monte Carlo simulation of a QDKD session.

Each round Alice prepares Z_B^a ψ− ⊗ |e_E⟩, Eve applies J, and Bob either
runs the Anticorrelation Check or encodes his bit with Z_B and returns the
photon through Eve's K to Alice's Bell analysis. Encode rounds are further
split into sacrificed rounds (public comparison for the QBER) and payload
rounds.

Randomness comes from six streams spawned from the master seed (alice, bob,
switch, measure, sacrifice, eve). Every stream yields exactly one value per
round in every mode, so sessions that differ only in their mode see the same
switch decisions and the same check outcomes.
"""

import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from application.bounds import (
    ChannelStats,
    SecurityVerdict,
    max_holevo_ae,
    max_holevo_be,
    security_condition,
)
from core.errors import ProtocolError, SessionAbortedError
from core.fock import default_space
from core.utils.logger import get_logger
from infrastructure.io import write_csv

from .decoding import decode, effective_qber, qber_counts
from .measurement import outcome_tables, sample_outcome
from .types import (
    BellOutcome,
    CheckOutcome,
    ProtocolConfig,
    ProtocolMode,
    RoundKind,
    RoundRecord,
    SessionReport,
)

logger = get_logger()

STREAM_NAMES = ("alice", "bob", "switch", "measure", "sacrifice", "eve")
UNDEFINED_QBER = 0.5
TRACE_HEADER = ("index", "kind", "alice_bit", "bob_bit", "check_outcome", "bell_outcome")


@dataclass(frozen=True)
class RoundDraws:
    """Pre-drawn per-round values of every random stream."""

    alice: np.ndarray
    bob: np.ndarray
    switch: np.ndarray
    measure: np.ndarray
    sacrifice: np.ndarray
    eve: np.ndarray


def draw_streams(seed: int, rounds: int) -> RoundDraws:
    """One value per round from each stream spawned off SeedSequence(seed)."""
    children = np.random.SeedSequence(seed).spawn(len(STREAM_NAMES))
    rngs = dict(zip(STREAM_NAMES, (np.random.default_rng(s) for s in children)))
    return RoundDraws(
        alice=rngs["alice"].integers(0, 2, size=rounds),
        bob=rngs["bob"].integers(0, 2, size=rounds),
        switch=rngs["switch"].random(rounds),
        measure=rngs["measure"].random(rounds),
        sacrifice=rngs["sacrifice"].random(rounds),
        eve=rngs["eve"].random(rounds),
    )


class _Tables:
    """Cumulative outcome distributions per mixture component."""

    def __init__(self, config: ProtocolConfig):
        space = config.space or default_space()
        self.check_outcomes = list(CheckOutcome)
        self.bell_outcomes = list(BellOutcome)
        self.check: List[Dict[int, np.ndarray]] = []
        self.bell: List[Dict[Tuple[int, int], np.ndarray]] = []
        for attack in config.attack.attacks:
            checks, bells = outcome_tables(attack, space)
            self.check.append(
                {a: np.cumsum([p[o] for o in self.check_outcomes]) for a, p in checks.items()}
            )
            self.bell.append(
                {ab: np.cumsum([p[o] for o in self.bell_outcomes]) for ab, p in bells.items()}
            )
        self.weights = np.cumsum(config.attack.weights)


class _Running:
    """Statistics accumulated while the session runs."""

    def __init__(self, fails_as_errors: bool):
        self.counts: Counter = Counter()
        self.fails_as_errors = fails_as_errors
        self.errors = 0
        self.comparable = 0

    def add_sacrificed(self, record: RoundRecord) -> None:
        errors, comparable = qber_counts((record,), self.fails_as_errors)
        self.errors += errors
        self.comparable += comparable

    def stats(self) -> Tuple[float, float]:
        n_check = self.counts[RoundKind.CHECK.value]
        if n_check == 0:
            return 0.0, 0.0
        return (
            self.counts[CheckOutcome.ANTICORR_01.value] / n_check,
            self.counts[CheckOutcome.ANTICORR_10.value] / n_check,
        )


def _verdict(running: _Running) -> Tuple[ChannelStats, float, SecurityVerdict]:
    p01_hat, p10_hat = running.stats()
    stats = ChannelStats.from_estimates(p01_hat, p10_hat)
    if running.comparable == 0:
        logger.warning(f"No comparable sacrificed rounds; QBER taken as {UNDEFINED_QBER}")
        raw = UNDEFINED_QBER
    else:
        raw = running.errors / running.comparable
    qber = effective_qber(raw, running.fails_as_errors)
    return stats, raw, security_condition(stats.p_anticorr, qber)


def run_session(config: ProtocolConfig) -> SessionReport:
    """
    Execute a session round by round.

    Args:
        config: Session parameters

    Returns:
        SessionReport with statistics, verdict, bounds and recovered bits

    Raises:
        ProtocolError: If a deterministic message does not fit in the
            payload rounds that actually occurred
    """
    started = time.perf_counter()
    tables = _Tables(config)
    draws = draw_streams(config.seed, config.rounds)
    message = config.message or ()
    mode = config.mode

    logger.info(
        f"🚀 Session start: mode={mode.value}, rounds={config.rounds}, "
        f"attack={config.attack.name}, seed={config.seed}"
    )

    records: List[RoundRecord] = []
    running = _Running(config.fails_as_errors)
    payload_count = 0
    message_sent = 0
    running_abort = False

    for index in range(config.rounds):
        # Eve picks this round's mixture component
        component = int(np.searchsorted(tables.weights, draws.eve[index], side="right"))
        component = min(component, len(tables.weights) - 1)
        alice_bit = int(draws.alice[index])
        u = float(draws.measure[index])

        if draws.switch[index] < config.check_probability:
            # check round: Bob measures the photon he received
            outcome = sample_outcome(tables.check_outcomes, tables.check[component][alice_bit], u)
            record = RoundRecord(
                index=index,
                kind=RoundKind.CHECK,
                alice_bit=alice_bit,
                check_outcome=outcome,
                attack_index=component,
            )
            running.counts[RoundKind.CHECK.value] += 1
            running.counts[outcome.value] += 1
        else:
            # encode round: sacrificed for the QBER or carrying payload
            bob_bit = int(draws.bob[index])
            sacrificed = bool(draws.sacrifice[index] < config.sacrifice_fraction)
            payload_index: Optional[int] = None
            if not sacrificed:
                if mode is ProtocolMode.RANDOM_KEY:
                    payload_index = payload_count
                elif message_sent < len(message):
                    payload_index = message_sent
                    if mode is ProtocolMode.BOB_TO_ALICE:
                        bob_bit = message[message_sent]
                    else:
                        alice_bit = message[message_sent]
                    message_sent += 1
                payload_count += 1

            # Bob's Z_B^b and Eve's K precede Alice's Bell analysis
            outcome = sample_outcome(
                tables.bell_outcomes, tables.bell[component][(alice_bit, bob_bit)], u
            )
            record = RoundRecord(
                index=index,
                kind=RoundKind.ENCODE,
                alice_bit=alice_bit,
                bob_bit=bob_bit,
                bell_outcome=outcome,
                sacrificed=sacrificed,
                payload_index=payload_index,
                attack_index=component,
            )
            running.counts[RoundKind.ENCODE.value] += 1
            running.counts[outcome.value] += 1
            if sacrificed:
                running.counts["sacrificed"] += 1
                running.add_sacrificed(record)

        records.append(record)

        # running security check on the statistics so far
        if (
            mode is ProtocolMode.BOB_TO_ALICE
            and (index + 1) % config.abort_interval == 0
            and running.counts[RoundKind.CHECK.value] > 0
        ):
            raw = running.errors / running.comparable if running.comparable else 0.0
            p01_hat, p10_hat = running.stats()
            stats = ChannelStats.from_estimates(p01_hat, p10_hat)
            check = security_condition(
                stats.p_anticorr, effective_qber(raw, config.fails_as_errors)
            )
            if not check.secure:
                running_abort = True
                logger.warning(
                    f"Aborting after {index + 1} rounds: {check.reason}; "
                    f"{message_sent} message bits already sent"
                )
                break

    rounds_executed = len(records)
    if mode.deterministic and not running_abort and message_sent < len(message):
        raise ProtocolError(
            f"message of {len(message)} bits needs more payload rounds: only "
            f"{message_sent} occurred in {rounds_executed} rounds"
        )

    p01_hat, p10_hat = running.stats()
    stats, qber_raw, verdict = _verdict(running)
    aborted = running_abort or not verdict.secure
    exposed_bits = message_sent if mode is ProtocolMode.BOB_TO_ALICE and aborted else 0

    alice_key: Tuple[int, ...] = ()
    bob_key: Tuple[int, ...] = ()
    decoded: Optional[Tuple[int, ...]] = None
    ciphertext: Optional[Tuple[int, ...]] = None
    dropped: Tuple[int, ...] = ()
    if not aborted:
        result = decode(records, mode, verdict)
        dropped = result.dropped_indices
        if mode is ProtocolMode.RANDOM_KEY:
            alice_key = result.bits
            bob_key = tuple(
                r.bob_bit
                for r in records
                if r.payload_index is not None and r.xor_bit is not None
            )
        else:
            decoded = result.bits
            ciphertext = result.ciphertext

    counts = {k: running.counts[k] for k in _count_keys()}
    report = SessionReport(
        mode=mode,
        seed=config.seed,
        rounds_requested=config.rounds,
        rounds_executed=rounds_executed,
        counts=counts,
        p01_hat=p01_hat,
        p10_hat=p10_hat,
        qber_hat=qber_raw,
        verdict=verdict,
        i_be_max=max_holevo_be(stats).value,
        i_ae_max=max_holevo_ae(stats).value,
        aborted=aborted,
        alice_key=alice_key,
        bob_key=bob_key,
        decoded_message=decoded,
        ciphertext=ciphertext,
        dropped_indices=dropped,
        exposed_bits=exposed_bits,
        records=tuple(records),
    )

    elapsed = time.perf_counter() - started
    status = "❌ aborted" if aborted else "✅ secure"
    logger.info(
        f"{status}: {rounds_executed} rounds in {elapsed:.2f}s, "
        f"P01={p01_hat:.4f}, P10={p10_hat:.4f}, QBER={qber_raw:.4f}"
    )
    return report


def _count_keys() -> List[str]:
    return (
        [RoundKind.CHECK.value, RoundKind.ENCODE.value, "sacrificed"]
        + [o.value for o in CheckOutcome]
        + [o.value for o in BellOutcome]
    )


def require_secure(report: SessionReport) -> SessionReport:
    """
    Raises:
        SessionAbortedError: If the session was aborted
    """
    if report.aborted:
        raise SessionAbortedError(f"session aborted: {report.verdict.reason}")
    return report


def write_trace(records: List[RoundRecord], path: Path | str) -> None:
    """Per-round CSV trace."""
    rows = (
        (
            r.index,
            r.kind.value,
            r.alice_bit,
            r.bob_bit,
            r.check_outcome.value if r.check_outcome else None,
            r.bell_outcome.value if r.bell_outcome else None,
        )
        for r in records
    )
    write_csv(TRACE_HEADER, rows, path)
    logger.debug(f"Wrote trace of {len(records)} rounds to {path}")


__all__ = [
    "RoundDraws",
    "draw_streams",
    "require_secure",
    "run_session",
    "write_trace",
]
