import argparse

from application.bounds import analyze_experiment
from core.commands import CommandCategory, ExitCode, command
from core.utils.logger import get_logger

from ..output import write_json
from .analyze_lib import add_analyze_arguments

logger = get_logger()


@command(
    "analyze",
    description="Security verdict from experimental loss and correlation rates",
    arguments=add_analyze_arguments,
    category=CommandCategory.ANALYSIS,
    examples=[
        "qdkd analyze --p-loss 0.77 --p-corr 0.05",
        "qdkd analyze --p-loss 0.77 --p-corr 0.05 --trusted",
    ],
)
def analyze_command_handler(args: argparse.Namespace) -> ExitCode:
    verdict = analyze_experiment(
        args.p_loss, args.p_corr, trusted_detectors=args.trusted, qber=args.qber
    )
    payload = {
        "input": {
            "p_loss": args.p_loss,
            "p_corr": args.p_corr,
            "trusted": args.trusted,
            "qber": args.qber,
        },
        "verdict": verdict.to_dict(),
    }
    write_json(payload, args.out)

    if not verdict.secure:
        logger.warning(f"Insecure: {verdict.reason}")
        return ExitCode.INSECURE
    return ExitCode.OK
