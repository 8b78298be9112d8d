"""
Type definitions for the security bounds.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

from core.errors import InvalidParameterError
from core.utils.logger import get_logger

logger = get_logger()

STATS_DOMAIN = (0.0, 0.5)


class Surface(Enum):
    """Which Holevo quantity is maximized."""

    BE = "be"  # Eve vs Bob's encoding
    AE = "ae"  # Eve vs Alice's prepared state


@dataclass(frozen=True)
class ChannelStats:
    """Anticorrelation probabilities measured by the check, each in [0, 0.5]."""

    p01: float
    p10: float

    def __post_init__(self):
        low, high = STATS_DOMAIN
        for name, value in (("p01", self.p01), ("p10", self.p10)):
            if not low <= value <= high:
                raise InvalidParameterError(f"{name}={value!r} outside [0, 0.5]")

    @property
    def p_anticorr(self) -> float:
        return (self.p01 + self.p10) / 2.0

    @classmethod
    def from_estimates(cls, p01_hat: float, p10_hat: float) -> "ChannelStats":
        """Clip Monte Carlo estimates into the physical domain."""
        low, high = STATS_DOMAIN
        p01 = min(max(p01_hat, low), high)
        p10 = min(max(p10_hat, low), high)
        if (p01, p10) != (p01_hat, p10_hat):
            logger.debug(
                f"Clipped estimates ({p01_hat:.6f}, {p10_hat:.6f}) to ({p01:.6f}, {p10:.6f})"
            )
        return cls(p01=p01, p10=p10)


@dataclass(frozen=True)
class EveParams:
    """Eve's unobservable parameters c, d ∈ [−1, 1]."""

    c: float
    d: float

    def __post_init__(self):
        for name, value in (("c", self.c), ("d", self.d)):
            if not -1.0 <= value <= 1.0:
                raise InvalidParameterError(f"{name}={value!r} outside [-1, 1]")


@dataclass(frozen=True)
class BoundsResult:
    """p, q, the two spectra and both Holevo bounds at one parameter point."""

    p: float
    q: float
    lambdas: Tuple[float, float, float, float]
    lambda_primes: Tuple[float, float]
    i_be: float
    i_ae: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "q": self.q,
            "lambdas": list(self.lambdas),
            "lambda_primes": list(self.lambda_primes),
            "i_be": self.i_be,
            "i_ae": self.i_ae,
        }


@dataclass(frozen=True)
class SurfaceMaximum:
    """Maximum of one Holevo surface over (c, d) at fixed statistics."""

    surface: Surface
    value: float
    argmax: EveParams
    region: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "c": self.argmax.c,
            "d": self.argmax.d,
            "region": self.region,
        }


@dataclass(frozen=True)
class SecurityVerdict:
    """Key-distillation verdict from the mean anticorrelation and the QBER."""

    p_anticorr: float
    qber: float
    h_q: float
    h_p: float
    secure: bool
    reason: str

    @property
    def margin(self) -> float:
        return 1.0 - (self.h_q + self.h_p)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p_anticorr": self.p_anticorr,
            "qber": self.qber,
            "h_q": self.h_q,
            "h_p": self.h_p,
            "secure": self.secure,
            "reason": self.reason,
        }


__all__ = [
    "BoundsResult",
    "ChannelStats",
    "EveParams",
    "SecurityVerdict",
    "Surface",
    "SurfaceMaximum",
]
