import argparse

from core.commands import CommandCategory, ExitCode, command
from core.fock import default_space
from core.utils.logger import get_logger

from ..output import write_json
from .attack_eval_lib import add_attack_eval_arguments, evaluate_attack, resolve_attack

logger = get_logger()


@command(
    "attack-eval",
    description="Observables and Holevo quantities of one individual attack",
    arguments=add_attack_eval_arguments,
    category=CommandCategory.SIMULATION,
    examples=[
        "qdkd attack-eval --name intercept",
        "qdkd attack-eval --file my_attack.txt --out report.json",
    ],
)
def attack_eval_command_handler(args: argparse.Namespace) -> ExitCode:
    space = default_space()
    attack = resolve_attack(args, space)
    payload = evaluate_attack(attack, space)
    write_json(payload, args.out)

    if payload["flagged"]:
        logger.warning(
            f"Attack {attack.name} is caught by the Anticorrelation Check "
            f"(P = {payload['p_anticorr']:.6g})"
        )
    else:
        logger.info(f"✅ Attack {attack.name} evaluated")
    return ExitCode.OK
