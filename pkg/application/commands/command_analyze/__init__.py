from .analyze_command_handler import analyze_command_handler

__all__ = ["analyze_command_handler"]
