import argparse

from application.protocol import run_session, write_trace
from core.commands import CommandCategory, ExitCode, command
from core.fock import default_space
from core.utils.logger import get_logger

from ..output import write_json
from .simulate_lib import add_simulate_arguments, build_config

logger = get_logger()


@command(
    "simulate",
    description="Monte Carlo QDKD session under an attack",
    arguments=add_simulate_arguments,
    category=CommandCategory.SIMULATION,
    examples=[
        "qdkd simulate --rounds 100000 --attack identity --seed 7",
        "qdkd simulate --rounds 20000 --attack intercept --mode bob_to_alice --message 1011",
        "qdkd simulate --rounds 50000 --mix identity:0.9 --mix bitflip:0.1 --trace trace.csv",
    ],
)
def simulate_command_handler(args: argparse.Namespace) -> ExitCode:
    config = build_config(args, default_space())
    report = run_session(config)

    if args.trace:
        write_trace(list(report.records), args.trace)
    write_json(report.to_dict(), args.out)

    if report.aborted:
        logger.warning(f"Session aborted: {report.verdict.reason}")
        return ExitCode.INSECURE
    return ExitCode.OK
