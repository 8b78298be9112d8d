import argparse

from ..output import add_output_argument


def add_analyze_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p-loss", type=float, required=True, help="probability of losing a photon")
    parser.add_argument(
        "--p-corr", type=float, required=True, help="probability of a correlated result"
    )
    parser.add_argument(
        "--trusted",
        action="store_true",
        help="detectors are trusted, so lost photons are traced out",
    )
    parser.add_argument("--qber", type=float, default=0.0, help="bit error rate in [0, 0.5]")
    add_output_argument(parser)
