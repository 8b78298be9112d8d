"""
Core utilities package.

Provides logging for the laboratory framework.
"""

from .logger import command_context, get_logger, setup_logger

__all__ = ["command_context", "get_logger", "setup_logger"]
