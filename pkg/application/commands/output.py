"""
Output plumbing shared by the subcommands.
"""

import argparse

from infrastructure.io import write_json


def add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out",
        default=None,
        metavar="PATH",
        help="write the result here instead of standard output",
    )


def undefined_or(value):
    """Eve's parameters print as "undefined" when their amplitude vanishes."""
    return "undefined" if value is None else value


__all__ = ["add_output_argument", "undefined_or", "write_json"]
