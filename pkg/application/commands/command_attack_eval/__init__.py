from .attack_eval_command_handler import attack_eval_command_handler

__all__ = ["attack_eval_command_handler"]
