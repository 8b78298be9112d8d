"""
Core commands framework package.

Provides the command registry, decorators, metadata types, exit codes and
handler protocol for building the command-line surface.
"""

from .decorators import command, get_command_metadata, is_registered_command
from .protocols import CommandHandler, validate_handler_signature
from .registry import CommandsRegistry, get_registry, set_registry
from .types import (
    CommandCategory,
    CommandMetadata,
    CommandStats,
    ExitCode,
    RegisteredCommand,
)

__all__ = [
    # Registry system
    "CommandsRegistry",
    "get_registry",
    "set_registry",
    # Decorators
    "command",
    "get_command_metadata",
    "is_registered_command",
    # Types and data structures
    "CommandCategory",
    "CommandMetadata",
    "CommandStats",
    "ExitCode",
    "RegisteredCommand",
    # Protocols
    "CommandHandler",
    "validate_handler_signature",
]
