from .simulate_command_handler import simulate_command_handler

__all__ = ["simulate_command_handler"]
