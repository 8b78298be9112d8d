from .bounds_command_handler import bounds_command_handler

__all__ = ["bounds_command_handler"]
