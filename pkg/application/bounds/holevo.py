"""
Closed-form Holevo bounds from the check statistics and Eve's (c, d).

All functions accept numpy arrays for c and d, so the grid oracle and the
surface generator evaluate whole parameter grids at once.
"""

from typing import Tuple

import numpy as np
from scipy.special import entr

from core.errors import InvalidParameterError
from core.utils.logger import get_logger

from .types import BoundsResult, ChannelStats, EveParams, Surface

logger = get_logger()

LN2 = float(np.log(2.0))
SPECTRUM_TOL = 1e-12


def pq_arrays(p01, p10, c, d) -> Tuple[np.ndarray, np.ndarray]:
    """p and q as linear functions of (c, d) at fixed P01, P10."""
    c = np.asarray(c, dtype=np.float64)
    d = np.asarray(d, dtype=np.float64)
    shared = p01 * (1.0 + c)
    tail = p10 * (1.0 - d)
    p = (c - d) / 2.0 - shared - tail
    q = (c + d) / 2.0 - shared + tail
    return p, q


def spectrum(p, q) -> np.ndarray:
    """λ1..λ4 = (1−p−q)/4, (1+p+q)/4, (1−p+q)/4, (1+p−q)/4 on the last axis."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    return np.stack(
        [(1.0 - p - q) / 4.0, (1.0 + p + q) / 4.0, (1.0 - p + q) / 4.0, (1.0 + p - q) / 4.0],
        axis=-1,
    )


def primed_spectrum(q) -> np.ndarray:
    q = np.asarray(q, dtype=np.float64)
    return np.stack([(1.0 - q) / 2.0, (1.0 + q) / 2.0], axis=-1)


def _entropy_bits(probs: np.ndarray) -> np.ndarray:
    return np.sum(entr(np.clip(probs, 0.0, None)), axis=-1) / LN2


def _valid(lambdas: np.ndarray) -> np.ndarray:
    return np.all((lambdas >= -SPECTRUM_TOL) & (lambdas <= 1.0 + SPECTRUM_TOL), axis=-1)


def holevo_grid_values(stats: ChannelStats, which: Surface, c, d) -> np.ndarray:
    """
    Holevo bound on a broadcast grid of (c, d).

    Points whose spectrum leaves [0, 1] are unphysical and come back as NaN.
    """
    p, q = pq_arrays(stats.p01, stats.p10, c, d)
    lambdas = spectrum(p, q)
    s_total = _entropy_bits(lambdas)
    if which is Surface.BE:
        values = s_total - 1.0
    else:
        values = s_total - _entropy_bits(primed_spectrum(q))
    return np.where(_valid(lambdas), values, np.nan)


def pq_from_stats(stats: ChannelStats, eve: EveParams) -> Tuple[float, float]:
    """
    Eve's overlaps p = ⟨μ+|ν−⟩ and q = ⟨μ+|ν+⟩ from the statistics.

    Args:
        stats: Measured anticorrelation probabilities
        eve: Eve's parameters

    Returns:
        (p, q)
    """
    p, q = pq_arrays(stats.p01, stats.p10, eve.c, eve.d)
    return float(p), float(q)


def holevo_bounds(stats: ChannelStats, eve: EveParams) -> BoundsResult:
    """
    Spectra and both Holevo bounds at one point.

    I_B:E = S(λ) − 1 and I_A:E = S(λ) − S(λ'), where S is the Shannon
    entropy in bits.

    Raises:
        InvalidParameterError: If any λ leaves [−1e-12, 1 + 1e-12]
    """
    p, q = pq_from_stats(stats, eve)
    lambdas = spectrum(p, q)
    if not _valid(lambdas):
        raise InvalidParameterError(
            f"(P01={stats.p01}, P10={stats.p10}, c={eve.c}, d={eve.d}) gives p={p:.6g}, "
            f"q={q:.6g} with spectrum {np.round(lambdas, 12).tolist()} outside [0, 1]"
        )
    primes = primed_spectrum(q)
    s_total = float(_entropy_bits(lambdas))
    result = BoundsResult(
        p=p,
        q=q,
        lambdas=tuple(float(x) for x in lambdas),
        lambda_primes=tuple(float(x) for x in primes),
        i_be=s_total - 1.0,
        i_ae=s_total - float(_entropy_bits(primes)),
    )
    logger.debug(f"Bounds at p={p:.6f}, q={q:.6f}: I_B:E={result.i_be:.9f}, I_A:E={result.i_ae:.9f}")
    return result


def holevo_be(stats: ChannelStats, eve: EveParams) -> BoundsResult:
    """Bound on Eve's information about Bob's encoding (read result.i_be)."""
    return holevo_bounds(stats, eve)


def holevo_ae(stats: ChannelStats, eve: EveParams) -> BoundsResult:
    """Bound on Eve's information about Alice's state (read result.i_ae)."""
    return holevo_bounds(stats, eve)


__all__ = [
    "holevo_ae",
    "holevo_be",
    "holevo_bounds",
    "holevo_grid_values",
    "pq_arrays",
    "pq_from_stats",
    "primed_spectrum",
    "spectrum",
]
