from .surface_command_handler import surface_command_handler

__all__ = ["surface_command_handler"]
