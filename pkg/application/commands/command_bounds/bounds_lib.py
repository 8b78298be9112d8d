import argparse
from typing import Any, Dict, Optional

from application.bounds import (
    ChannelStats,
    EveParams,
    Surface,
    holevo_bounds,
    max_holevo,
    max_holevo_grid,
)

from ..output import add_output_argument


def add_bounds_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p01", type=float, required=True, help="P01 in [0, 0.5]")
    parser.add_argument("--p10", type=float, required=True, help="P10 in [0, 0.5]")
    parser.add_argument("--c", type=float, default=None, help="Eve's c in [-1, 1]")
    parser.add_argument("--d", type=float, default=None, help="Eve's d in [-1, 1]")
    parser.add_argument(
        "--maximize",
        action="store_true",
        help="report the maxima of both bounds over (c, d)",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        help="with --maximize, cross-check each maximum by grid search",
    )
    parser.add_argument(
        "--grid-step",
        type=float,
        default=None,
        help="grid spacing for --verify (default from QDKD_GRID_STEP)",
    )
    add_output_argument(parser)


def point_payload(stats: ChannelStats, eve: EveParams) -> Dict[str, Any]:
    result = holevo_bounds(stats, eve)
    return {"p01": stats.p01, "p10": stats.p10, "c": eve.c, "d": eve.d, **result.to_dict()}


def maximize_payload(
    stats: ChannelStats, verify: bool, grid_step: Optional[float]
) -> Dict[str, Any]:
    """Both region-formula maxima, each optionally paired with its grid-search value."""
    payload: Dict[str, Any] = {"p01": stats.p01, "p10": stats.p10}
    for surface in Surface:
        maximum = max_holevo(stats, surface).to_dict()
        if verify:
            grid = max_holevo_grid(stats, surface, step=grid_step)
            maximum["grid_value"] = grid.value
            maximum["grid_c"] = grid.argmax.c
            maximum["grid_d"] = grid.argmax.d
            maximum["grid_deviation"] = abs(grid.value - maximum["value"])
        payload[surface.value] = maximum
    return payload
