import argparse

from application.bounds import Surface, surface_grid
from core.commands import CommandCategory, ExitCode, command
from core.utils.logger import get_logger
from infrastructure.io import emit, to_csv_text

from .surface_lib import SURFACE_HEADER, add_surface_arguments

logger = get_logger()


@command(
    "surface",
    description="CSV of the maximum Holevo bound over a P01 x P10 grid",
    arguments=add_surface_arguments,
    category=CommandCategory.ANALYSIS,
    examples=[
        "qdkd surface --which be --grid 51 --out be.csv",
        "qdkd surface --which ae --grid 3",
    ],
)
def surface_command_handler(args: argparse.Namespace) -> ExitCode:
    rows = surface_grid(Surface(args.which), args.grid)
    emit(to_csv_text(SURFACE_HEADER, rows), args.out)

    # The row count would corrupt a CSV on standard output
    if args.out not in (None, "-"):
        emit(f"{len(rows)} rows written to {args.out}\n")

    logger.info(f"✅ Surface {args.which} with {len(rows)} rows")
    return ExitCode.OK
