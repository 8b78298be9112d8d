import argparse

from application.bounds import Surface

from ..output import add_output_argument

SURFACE_HEADER = ("p01", "p10", "value")


def add_surface_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--which",
        choices=[s.value for s in Surface],
        required=True,
        help="be: Eve vs Bob's encoding, ae: Eve vs Alice's state",
    )
    parser.add_argument("--grid", type=int, required=True, metavar="N", help="N x N points, N >= 2")
    add_output_argument(parser)
