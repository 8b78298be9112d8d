"""
Key-distillation condition and the experimental-parameter analyzer.
"""

from core.errors import InvalidParameterError
from core.qmath import binary_entropy
from core.utils.logger import get_logger

from .maximize import THRESHOLD
from .types import SecurityVerdict

logger = get_logger()


def mutual_information_ab(qber: float) -> float:
    """Alice-Bob information over a binary channel with error rate 𝒬: 1 − H(𝒬)."""
    return 1.0 - binary_entropy(qber)


def security_condition(p_anticorr: float, qber: float) -> SecurityVerdict:
    """
    Decide whether secret keys can be distilled.

    Secure iff 0.25 < 𝒫 <= 0.5 and H(𝒬) + H(1 − 2𝒫) < 1.

    Args:
        p_anticorr: Mean anticorrelation 𝒫 = (P01 + P10)/2, in [0, 0.5]
        qber: Bit error rate 𝒬 in [0, 0.5]; callers remap rates above 0.5

    Returns:
        SecurityVerdict whose reason names the deciding clause

    Raises:
        InvalidParameterError: If either input lies outside [0, 0.5]
    """
    if not 0.0 <= p_anticorr <= 0.5:
        raise InvalidParameterError(f"anticorrelation {p_anticorr!r} outside [0, 0.5]")
    if not 0.0 <= qber <= 0.5:
        raise InvalidParameterError(f"QBER {qber!r} outside [0, 0.5]")

    h_q = binary_entropy(qber)
    h_p = binary_entropy(1.0 - 2.0 * p_anticorr)
    total = h_q + h_p

    if p_anticorr <= THRESHOLD:
        secure = False
        reason = f"P <= 0.25 (P = {p_anticorr:.6g}): keys cannot be distilled"
    elif total >= 1.0:
        secure = False
        reason = f"H(Q) + H(1-2P) = {total:.6g} >= 1: Eve's bound reaches I_A:B"
    else:
        secure = True
        reason = f"H(Q) + H(1-2P) = {total:.6g} < 1 with 0.25 < P <= 0.5"

    verdict = SecurityVerdict(
        p_anticorr=p_anticorr, qber=qber, h_q=h_q, h_p=h_p, secure=secure, reason=reason
    )
    logger.debug(f"Security verdict: secure={secure}, margin={verdict.margin:.6g}")
    return verdict


def anticorrelation_from_experiment(p_loss: float, p_corr: float, trusted: bool) -> float:
    """
    𝒫 from photon-loss and correlated-result probabilities.

    Untrusted detectors count every lost photon against the channel; trusted
    detectors let losses be traced out.

    Raises:
        InvalidParameterError: If the probabilities are negative or sum above 1
    """
    if p_loss < 0.0 or p_corr < 0.0 or p_loss + p_corr > 1.0:
        raise InvalidParameterError(
            f"p_loss={p_loss!r}, p_corr={p_corr!r} must be >= 0 with sum <= 1"
        )
    if trusted:
        return (1.0 - p_corr) / 2.0
    return (1.0 - p_loss - p_corr) / 2.0


def analyze_experiment(
    p_loss: float, p_corr: float, trusted_detectors: bool = False, qber: float = 0.0
) -> SecurityVerdict:
    """Verdict for measured loss and correlation rates at a given QBER."""
    p_anticorr = anticorrelation_from_experiment(p_loss, p_corr, trusted_detectors)
    logger.info(
        f"Experiment: p_loss={p_loss}, p_corr={p_corr}, trusted={trusted_detectors} "
        f"-> P={p_anticorr:.6g}"
    )
    return security_condition(p_anticorr, qber)


__all__ = [
    "analyze_experiment",
    "anticorrelation_from_experiment",
    "mutual_information_ab",
    "security_condition",
]
