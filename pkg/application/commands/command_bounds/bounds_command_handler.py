import argparse

from application.bounds import ChannelStats, EveParams
from core.commands import CommandCategory, ExitCode, command
from core.errors import InvalidParameterError
from core.utils.logger import get_logger

from ..output import write_json
from .bounds_lib import add_bounds_arguments, maximize_payload, point_payload

logger = get_logger()


@command(
    "bounds",
    description="Holevo bounds at one (c, d) point or maximized over Eve's parameters",
    arguments=add_bounds_arguments,
    category=CommandCategory.ANALYSIS,
    examples=[
        "qdkd bounds --p01 0.35 --p10 0.35 --maximize",
        "qdkd bounds --p01 0.3 --p10 0.4 --c 1 --d -1",
        "qdkd bounds --p01 0.3 --p10 0.4 --maximize --verify --grid-step 0.01",
    ],
)
def bounds_command_handler(args: argparse.Namespace) -> ExitCode:
    stats = ChannelStats(args.p01, args.p10)

    if args.maximize:
        if args.c is not None or args.d is not None:
            raise InvalidParameterError("--c/--d cannot be combined with --maximize")
        payload = maximize_payload(stats, verify=args.verify, grid_step=args.grid_step)
    else:
        if args.c is None or args.d is None:
            raise InvalidParameterError("give both --c and --d, or --maximize")
        if args.verify:
            raise InvalidParameterError("--verify only applies with --maximize")
        payload = point_payload(stats, EveParams(args.c, args.d))

    write_json(payload, args.out)
    logger.info(f"✅ Bounds computed for P01={stats.p01}, P10={stats.p10}")
    return ExitCode.OK
