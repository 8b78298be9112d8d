"""
Protocol definitions for command handlers.
"""

import argparse
from typing import Callable, Protocol, runtime_checkable

from .types import ExitCode


@runtime_checkable
class CommandHandler(Protocol):
    """Protocol for subcommand handlers."""

    def __call__(self, args: argparse.Namespace) -> ExitCode:
        """
        Run the command.

        Args:
            args: Parsed command-line arguments

        Returns:
            Exit code for the process
        """
        ...


def validate_handler_signature(func: Callable) -> bool:
    """A handler must be callable with exactly one positional argument."""
    if not callable(func):
        return False
    code = getattr(func, "__code__", None)
    if code is None:
        return isinstance(func, CommandHandler)
    return code.co_argcount == 1


__all__ = ["CommandHandler", "validate_handler_signature"]
