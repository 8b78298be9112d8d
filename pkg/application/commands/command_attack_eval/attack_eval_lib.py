import argparse
from typing import Any, Dict

from application.attacks import (
    AttackUnitary,
    BuiltinAttack,
    builtin_attack,
    exact_holevo,
    post_attack_states,
)
from application.bounds import (
    THRESHOLD,
    ChannelStats,
    EveParams,
    holevo_bounds,
    max_holevo_ae,
    max_holevo_be,
)
from core.errors import InvalidParameterError
from core.fock import CompositeSpace, default_space

from ..output import add_output_argument, undefined_or

# Projector probabilities carry rounding of this order
FLAG_TOL = 1e-9


def add_attack_eval_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--name",
        choices=[k.value for k in BuiltinAttack if k is not BuiltinAttack.CUSTOM_FILE],
        help="built-in attack",
    )
    source.add_argument("--file", metavar="PATH", help="custom attack file")
    add_output_argument(parser)


def resolve_attack(args: argparse.Namespace, space: CompositeSpace) -> AttackUnitary:
    if args.file:
        return builtin_attack(BuiltinAttack.CUSTOM_FILE, space, path=args.file)
    if args.name:
        return builtin_attack(args.name, space)
    raise InvalidParameterError("give --name or --file")


def evaluate_attack(attack: AttackUnitary, space: CompositeSpace | None = None) -> Dict[str, Any]:
    """
    Observables, hidden parameters, closed-form and exact Holevo values of
    one attack.

    An undefined c or d multiplies a vanishing term of p and q, so the
    closed-form bounds substitute 0 for it.
    """
    space = space or default_space()
    outcome = post_attack_states(attack, space)
    stats = ChannelStats.from_estimates(outcome.p01, outcome.p10)
    eve = EveParams(
        0.0 if outcome.c is None else outcome.c,
        0.0 if outcome.d is None else outcome.d,
    )
    closed = holevo_bounds(stats, eve)
    exact = exact_holevo(attack, space)

    return {
        "attack": attack.name,
        "p01": outcome.p01,
        "p10": outcome.p10,
        "c": undefined_or(outcome.c),
        "d": undefined_or(outcome.d),
        "p": outcome.p,
        "q": outcome.q,
        "closed_form": {"i_be": closed.i_be, "i_ae": closed.i_ae},
        "exact": {"i_be": exact.i_be, "i_ae": exact.i_ae},
        "max": {
            "be": max_holevo_be(stats).to_dict(),
            "ae": max_holevo_ae(stats).to_dict(),
        },
        "p_anticorr": stats.p_anticorr,
        "flagged": stats.p_anticorr <= THRESHOLD + FLAG_TOL,
    }
