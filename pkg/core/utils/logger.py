"""
Logging configuration using loguru.

Console output goes to stderr: stdout carries command results only, so
repeated runs stay byte-identical. Every record carries a `command` extra,
bound by the registry while a subcommand runs.
"""

import sys

from loguru import logger

from config import config

NO_COMMAND = "-"

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<magenta>{extra[command]}</magenta> | "
    "<cyan>{name}</cyan>:<cyan>{line}</cyan> | "
    "<level>{message}</level>"
)

FILE_FORMAT = (
    "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[command]} | "
    "{name}:{function}:{line} | {message}"
)


def setup_logger(level: str | None = None) -> None:
    """
    Configure the stderr sink and, when LOG_FILE is set, the error file.

    Args:
        level: Overrides the configured console level when given
    """
    logger.remove()
    logger.configure(extra={"command": NO_COMMAND})

    logger.add(
        sys.stderr,
        format=CONSOLE_FORMAT,
        level=level or config.log_level,
        colorize=True,
        backtrace=True,
        diagnose=False,
    )

    if config.log_file:
        logger.add(
            config.log_file,
            format=FILE_FORMAT,
            level="ERROR",
            rotation="10 MB",
            retention="1 month",
            compression="zip",
            backtrace=True,
            diagnose=True,
        )

    logger.debug(f"Logging at {level or config.log_level} on stderr")


def get_logger():
    """Get configured logger instance."""
    return logger


def command_context(name: str):
    """Context manager tagging every record logged inside it with a command name."""
    return logger.contextualize(command=name)
