import argparse
from typing import List, Optional, Tuple

from application.attacks import AttackMixture, AttackUnitary, BuiltinAttack, builtin_attack
from application.protocol import ProtocolConfig, ProtocolMode
from core.errors import InvalidParameterError
from core.fock import CompositeSpace

from ..output import add_output_argument

MIX_SEPARATOR = ":"


def add_simulate_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rounds", type=int, required=True, help="number of protocol rounds")
    parser.add_argument(
        "--attack",
        choices=[k.value for k in BuiltinAttack],
        default=None,
        help="Eve's attack (default identity, or custom_file with --attack-file)",
    )
    parser.add_argument("--attack-file", metavar="PATH", help="custom attack file")
    parser.add_argument(
        "--mix",
        action="append",
        default=None,
        metavar="NAME:WEIGHT",
        help="mixture component, repeatable; weights must sum to 1",
    )
    parser.add_argument("--seed", type=int, default=None, help="master seed (default QDKD_SEED)")
    parser.add_argument(
        "--mode",
        choices=[m.value for m in ProtocolMode],
        default=ProtocolMode.RANDOM_KEY.value,
    )
    parser.add_argument("--message", default=None, metavar="BITS", help="e.g. 0110 for deterministic modes")
    parser.add_argument("--trace", metavar="PATH", help="write the per-round CSV trace")
    parser.add_argument("--check-probability", type=float, default=None)
    parser.add_argument("--sacrifice-fraction", type=float, default=None)
    parser.add_argument(
        "--trusted",
        action="store_true",
        help="trusted detectors: failed Bell analyses are not counted as errors",
    )
    add_output_argument(parser)


def parse_bits(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    bad = sorted(set(text) - {"0", "1"})
    if bad or not text:
        raise InvalidParameterError(f"message must be a non-empty string of 0 and 1, got {text!r}")
    return tuple(int(ch) for ch in text)


def parse_mix(entries: List[str], space: CompositeSpace, path: Optional[str]) -> AttackMixture:
    """Build a mixture from NAME:WEIGHT entries."""
    components = []
    for entry in entries:
        name, sep, weight = entry.rpartition(MIX_SEPARATOR)
        if not sep or not name:
            raise InvalidParameterError(f"mix entry {entry!r} is not NAME:WEIGHT")
        try:
            value = float(weight)
        except ValueError as e:
            raise InvalidParameterError(f"mix weight {weight!r} is not a number") from e
        components.append((value, builtin_attack(name, space, path=path)))
    name = "+".join(entry.rpartition(MIX_SEPARATOR)[0] for entry in entries)
    return AttackMixture(components=tuple(components), name=name)


def resolve_attack(
    args: argparse.Namespace, space: CompositeSpace
) -> AttackMixture | AttackUnitary:
    if args.mix:
        if args.attack is not None:
            raise InvalidParameterError("--attack cannot be combined with --mix")
        return parse_mix(args.mix, space, args.attack_file)
    name = args.attack
    if name is None:
        name = BuiltinAttack.CUSTOM_FILE.value if args.attack_file else BuiltinAttack.IDENTITY.value
    return builtin_attack(name, space, path=args.attack_file)


def build_config(args: argparse.Namespace, space: CompositeSpace) -> ProtocolConfig:
    """Session parameters from the flags; unset flags keep the configured defaults."""
    overrides = {
        key: value
        for key, value in (
            ("seed", args.seed),
            ("check_probability", args.check_probability),
            ("sacrifice_fraction", args.sacrifice_fraction),
        )
        if value is not None
    }
    return ProtocolConfig(
        rounds=args.rounds,
        attack=resolve_attack(args, space),
        mode=ProtocolMode(args.mode),
        message=parse_bits(args.message),
        fails_as_errors=not args.trusted,
        space=space,
        **overrides,
    )
