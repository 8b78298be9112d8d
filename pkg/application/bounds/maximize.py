"""
Maxima of the Holevo bounds over Eve's free parameters (c, d).

The region formulas give the maxima in closed form; max_holevo_grid is an
independent brute-force search used to cross-check them.
"""

from typing import List, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from config import config
from core.errors import InvalidParameterError
from core.qmath import binary_entropy
from core.utils.logger import get_logger

from .holevo import holevo_bounds, holevo_grid_values
from .types import ChannelStats, EveParams, Surface, SurfaceMaximum

logger = get_logger()

THRESHOLD = 0.25
GRID_CHUNK_ROWS = 128
COARSE_STEP = 0.02
COARSE_CELLS = 4


def max_holevo_be(stats: ChannelStats) -> SurfaceMaximum:
    """
    Maximum of I_B:E over (c, d) by region.

    Points on P01 = 0.25 or P10 = 0.25 belong to the >= branch.
    """
    a, b = stats.p01, stats.p10
    if a >= THRESHOLD and b >= THRESHOLD:
        eve, region = EveParams(1.0, -1.0), "both>=0.25"
    elif a < THRESHOLD and b >= THRESHOLD:
        eve, region = EveParams(2.0 * a / (1.0 - 2.0 * a), -1.0), "p01<0.25"
    elif a >= THRESHOLD:
        eve, region = EveParams(1.0, 2.0 * b / (2.0 * b - 1.0)), "p10<0.25"
    else:
        eve = EveParams(2.0 * a / (1.0 - 2.0 * a), 2.0 * b / (2.0 * b - 1.0))
        logger.debug(f"I_B:E plateau at ({a}, {b}), argmax c={eve.c:.6f}, d={eve.d:.6f}")
        return SurfaceMaximum(Surface.BE, 1.0, eve, "both<0.25")

    value = holevo_bounds(stats, eve).i_be
    logger.debug(f"I_B:E max at ({a}, {b}) in region {region}: {value:.9f}")
    return SurfaceMaximum(Surface.BE, value, eve, region)


def max_holevo_ae(stats: ChannelStats) -> SurfaceMaximum:
    """
    Maximum of I_A:E over (c, d).

    For P01 + P10 >= 0.5 the maximum sits at c = 1, d = −1. Below that line
    Eve reaches p = 0 and the bound saturates at 1; the reported argmax is
    c = 1, d = 1 − 4·P01/(1 − 2·P10).
    """
    a, b = stats.p01, stats.p10
    if a + b >= 2.0 * THRESHOLD:
        eve = EveParams(1.0, -1.0)
        value = holevo_bounds(stats, eve).i_ae
        logger.debug(f"I_A:E max at ({a}, {b}) in region sum>=0.5: {value:.9f}")
        return SurfaceMaximum(Surface.AE, value, eve, "sum>=0.5")

    eve = EveParams(1.0, 1.0 - 4.0 * a / (1.0 - 2.0 * b))
    return SurfaceMaximum(Surface.AE, 1.0, eve, "sum<0.5")


def max_holevo(stats: ChannelStats, which: Surface) -> SurfaceMaximum:
    return max_holevo_be(stats) if which is Surface.BE else max_holevo_ae(stats)


def _grid_argmax(
    stats: ChannelStats, which: Surface, c_axis: np.ndarray, d_axis: np.ndarray
) -> Tuple[float, int, int]:
    best_value, best_i, best_j = -np.inf, -1, -1
    for start in range(0, c_axis.size, GRID_CHUNK_ROWS):
        rows = c_axis[start : start + GRID_CHUNK_ROWS]
        values = holevo_grid_values(stats, which, rows[:, None], d_axis[None, :])
        if np.all(np.isnan(values)):
            continue
        flat = int(np.nanargmax(values))
        i, j = divmod(flat, d_axis.size)
        if values[i, j] > best_value:
            best_value, best_i, best_j = float(values[i, j]), start + i, j
    return best_value, best_i, best_j


def _top_cells(
    stats: ChannelStats, which: Surface, axis: np.ndarray, count: int
) -> List[Tuple[float, float]]:
    """The `count` best (c, d) points of a full grid, best first."""
    values = holevo_grid_values(stats, which, axis[:, None], axis[None, :])
    values = np.where(np.isnan(values), -np.inf, values)
    order = np.argsort(values, axis=None)[::-1][:count]
    cells = []
    for flat in order:
        i, j = divmod(int(flat), axis.size)
        if np.isfinite(values[i, j]):
            cells.append((float(axis[i]), float(axis[j])))
    return cells


def _window(axis: np.ndarray, center: float, half_width: float) -> np.ndarray:
    low = np.searchsorted(axis, center - half_width - 1e-12, side="left")
    high = np.searchsorted(axis, center + half_width + 1e-12, side="right")
    return axis[low:high]


def _refine(
    stats: ChannelStats, which: Surface, c: float, d: float, step: float
) -> Tuple[float, float, float]:
    """One coordinate-wise bounded refinement pass around a grid point."""

    # c first with d held, then d at the improved c
    def objective_c(x: float) -> float:
        value = holevo_grid_values(stats, which, x, d)
        return np.inf if np.isnan(value) else -float(value)

    low, high = max(-1.0, c - step), min(1.0, c + step)
    if high > low:
        found = minimize_scalar(objective_c, bounds=(low, high), method="bounded")
        if np.isfinite(found.fun) and -found.fun > -objective_c(c):
            c = float(found.x)

    def objective_d(x: float) -> float:
        value = holevo_grid_values(stats, which, c, x)
        return np.inf if np.isnan(value) else -float(value)

    low, high = max(-1.0, d - step), min(1.0, d + step)
    if high > low:
        found = minimize_scalar(objective_d, bounds=(low, high), method="bounded")
        if np.isfinite(found.fun) and -found.fun > -objective_d(d):
            d = float(found.x)

    return float(holevo_grid_values(stats, which, c, d)), c, d


def max_holevo_grid(
    stats: ChannelStats, which: Surface, step: float | None = None
) -> SurfaceMaximum:
    """
    Brute-force maximum over a uniform (c, d) grid with one refinement pass.

    Steps finer than COARSE_STEP are searched coarse-to-fine: a COARSE_STEP
    grid picks the COARSE_CELLS best cells, and the fine grid is evaluated
    only in a ±COARSE_STEP window around each of them.

    Args:
        stats: Check statistics
        which: Surface to maximize
        step: Grid spacing in (0, 0.1]; defaults to the configured grid step

    Returns:
        SurfaceMaximum with region "grid"

    Raises:
        InvalidParameterError: If step is outside (0, 0.1]
    """
    step = config.grid_step if step is None else step
    if not 0.0 < step <= 0.1:
        raise InvalidParameterError(f"grid step {step!r} outside (0, 0.1]")

    axis = np.linspace(-1.0, 1.0, int(round(2.0 / step)) + 1)
    if step >= COARSE_STEP:
        value, i, j = _grid_argmax(stats, which, axis, axis)
        if i < 0:
            raise InvalidParameterError(f"no physical (c, d) point for {stats}")
        best_c, best_d = float(axis[i]), float(axis[j])
    else:
        # coarse pass over the whole square
        coarse = np.linspace(-1.0, 1.0, int(round(2.0 / COARSE_STEP)) + 1)
        cells = _top_cells(stats, which, coarse, COARSE_CELLS)
        if not cells:
            raise InvalidParameterError(f"no physical (c, d) point for {stats}")
        best_c, best_d = cells[0]
        value = float(holevo_grid_values(stats, which, best_c, best_d))
        for c0, d0 in cells:
            # fine lattice points within one coarse step of the cell
            c_axis = _window(axis, c0, COARSE_STEP)
            d_axis = _window(axis, d0, COARSE_STEP)
            found, i, j = _grid_argmax(stats, which, c_axis, d_axis)
            if i >= 0 and found > value:
                value, best_c, best_d = found, float(c_axis[i]), float(d_axis[j])

    # bounded polish around the best lattice point
    refined, c, d = _refine(stats, which, best_c, best_d, step)
    if refined > value:
        value = refined
    else:
        c, d = best_c, best_d
    logger.debug(
        f"Grid {which.value} max at ({stats.p01}, {stats.p10}): {value:.9f} "
        f"at c={c:.6f}, d={d:.6f}"
    )
    return SurfaceMaximum(which, value, EveParams(c, d), "grid")


def diagonal_max(p_anticorr: float) -> float:
    """
    Common maximum of both surfaces on the diagonal P01 = P10 = 𝒫.

    Raises:
        InvalidParameterError: If 𝒫 lies outside [0, 0.5]
    """
    if not 0.0 <= p_anticorr <= 0.5:
        raise InvalidParameterError(f"anticorrelation {p_anticorr!r} outside [0, 0.5]")
    if p_anticorr >= THRESHOLD:
        return binary_entropy(1.0 - 2.0 * p_anticorr)
    return 1.0


def surface_grid(which: Surface, n: int) -> List[Tuple[float, float, float]]:
    """
    Region-formula maxima on a uniform n×n grid over [0, 0.5]².

    Rows are ordered with p01 as the outer index.

    Raises:
        InvalidParameterError: If n < 2
    """
    if n < 2:
        raise InvalidParameterError(f"surface grid needs n >= 2, got {n}")
    axis = np.linspace(0.0, 0.5, n)
    rows = []
    for p01 in axis:
        for p10 in axis:
            stats = ChannelStats(float(p01), float(p10))
            rows.append((stats.p01, stats.p10, max_holevo(stats, which).value))
    logger.info(f"Computed {which.value} surface on a {n}x{n} grid")
    return rows


__all__ = [
    "THRESHOLD",
    "diagonal_max",
    "max_holevo",
    "max_holevo_ae",
    "max_holevo_be",
    "max_holevo_grid",
    "surface_grid",
]
