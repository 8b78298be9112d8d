"""
Command-line entry point for the QDKD laboratory.

Configures logging, registers every subcommand and dispatches. Results go
to standard output, diagnostics to standard error, and the process exit
code follows the ExitCode contract (0 ok, 1 I/O, 2 invalid input,
3 insecure or aborted).
"""

# Standard library imports
import sys
from typing import Optional, Sequence

# Local application imports
from application.commands import initialize_registry
from core.commands import ExitCode
from core.utils.logger import get_logger, setup_logger

# Setup logging
setup_logger()
logger = get_logger()


def main(argv: Optional[Sequence[str]] = None) -> ExitCode:
    """
    Parse arguments and run one subcommand.

    Args:
        argv: Arguments without the program name; defaults to sys.argv

    Returns:
        ExitCode of the subcommand
    """
    registry = initialize_registry()
    return registry.dispatch(argv)


def run() -> None:
    try:
        sys.exit(int(main()))
    except KeyboardInterrupt:
        logger.info("👋 Interrupted by user")
        sys.exit(130)


if __name__ == "__main__":
    run()
