from core.commands import CommandsRegistry, get_registry
from core.utils.logger import get_logger

logger = get_logger()


def initialize_registry() -> CommandsRegistry:
    """
    Import every subcommand package so its @command decorator registers it.

    Returns:
        The populated global registry
    """
    try:
        from . import (  # noqa: F401
            command_analyze,
            command_attack_eval,
            command_bounds,
            command_simulate,
            command_surface,
        )

        registry = get_registry()
        visible = [c for c in registry.get_all_commands() if not c.metadata.hidden]
        logger.debug(
            f"Registry initialized with {len(visible)} visible commands "
            f"out of {len(registry.get_all_commands())} total"
        )
        return registry

    except Exception as e:
        logger.error(f"Failed to initialize registry: {e}")
        raise RuntimeError(f"Registry initialization failed: {e}") from e
