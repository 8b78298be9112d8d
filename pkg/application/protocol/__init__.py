"""
Monte Carlo QDKD sessions: round state machine, measurements, decoding and
QBER estimation.
"""

from .decoding import (
    DecodeResult,
    decode,
    effective_qber,
    estimate_qber,
    payload_rounds,
    qber_counts,
)
from .measurement import (
    RoundOperators,
    bell_probabilities,
    check_probabilities,
    expected_error_rate,
    measure_bell,
    measure_check,
    outcome_tables,
    sample_outcome,
)
from .session import RoundDraws, draw_streams, require_secure, run_session, write_trace
from .types import (
    BellOutcome,
    CheckOutcome,
    ProtocolConfig,
    ProtocolMode,
    RoundKind,
    RoundRecord,
    SessionReport,
    bit_string,
)

__all__ = [
    # Types
    "BellOutcome",
    "CheckOutcome",
    "DecodeResult",
    "ProtocolConfig",
    "ProtocolMode",
    "RoundDraws",
    "RoundKind",
    "RoundOperators",
    "RoundRecord",
    "SessionReport",
    "bit_string",
    # Measurement
    "bell_probabilities",
    "check_probabilities",
    "expected_error_rate",
    "measure_bell",
    "measure_check",
    "outcome_tables",
    "sample_outcome",
    # Session
    "draw_streams",
    "require_secure",
    "run_session",
    "write_trace",
    # Decoding
    "decode",
    "effective_qber",
    "estimate_qber",
    "payload_rounds",
    "qber_counts",
]
