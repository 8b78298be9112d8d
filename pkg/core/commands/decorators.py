"""
Decorators for declarative command registration.
"""

from typing import Callable, List, Optional

from core.utils.logger import get_logger

from .protocols import CommandHandler
from .registry import get_registry
from .types import CommandCategory, CommandMetadata, ParserConfigurator

logger = get_logger()


def command(
    name: str,
    *,
    description: str,
    arguments: Optional[ParserConfigurator] = None,
    category: CommandCategory = CommandCategory.ANALYSIS,
    usage: Optional[str] = None,
    aliases: Optional[List[str]] = None,
    examples: Optional[List[str]] = None,
    hidden: bool = False,
) -> Callable[[CommandHandler], CommandHandler]:
    """
    Decorator for registering subcommands.

    Args:
        name: Subcommand name
        description: Human-readable description of the command
        arguments: Callback adding the command's flags to its sub-parser
        category: Command category for help grouping
        usage: Usage line overriding the one argparse generates
        aliases: Alternative command names
        examples: Usage examples shown in the command's help
        hidden: Whether to leave the command out of the parser

    Returns:
        Decorated handler function

    Example:
        @command("analyze", description="Verdict from experimental rates",
                 arguments=add_analyze_arguments)
        def cmd_analyze(args: argparse.Namespace) -> ExitCode:
            ...
    """

    def decorator(func: CommandHandler) -> CommandHandler:
        metadata = CommandMetadata(
            name=name,
            description=description,
            category=category,
            aliases=aliases or [],
            usage=usage,
            examples=examples or [],
            hidden=hidden,
        )

        command_id = get_registry().register(func, metadata, configure=arguments)

        # Add metadata to function for introspection
        func.__command_metadata__ = metadata  # type: ignore
        func.__command_id__ = command_id  # type: ignore

        logger.debug(f"Registered command handler: {name}")
        return func

    return decorator


def get_command_metadata(func: Callable) -> Optional[CommandMetadata]:
    """Get metadata from a decorated command function."""
    return getattr(func, "__command_metadata__", None)


def is_registered_command(func: Callable) -> bool:
    return hasattr(func, "__command_metadata__") and hasattr(func, "__command_id__")
