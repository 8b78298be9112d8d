"""
Central registry for command-line subcommands.
Builds the argparse parser from registered metadata and dispatches with
exit-code mapping and timing statistics.
"""

import argparse
from collections import defaultdict
import time
from typing import Any, Dict, List, Optional, Sequence

from core.errors import LabError, SessionAbortedError
from core.utils.logger import command_context, get_logger, setup_logger

from .protocols import validate_handler_signature
from .types import (
    CommandCategory,
    CommandFunction,
    CommandMetadata,
    CommandTable,
    ExitCode,
    ParserConfigurator,
    RegisteredCommand,
)


class CommandsRegistry:
    """
    Registry of subcommands with metadata, parser construction and dispatch.
    """

    def __init__(self, prog: str = "qdkd"):
        self.prog = prog
        self._commands: CommandTable = {}
        self._names: Dict[str, str] = {}  # name or alias -> command id
        self._categories: Dict[CommandCategory, List[str]] = defaultdict(list)
        self._logger = get_logger()

    def register(
        self,
        func: CommandFunction,
        metadata: CommandMetadata,
        configure: Optional[ParserConfigurator] = None,
    ) -> str:
        """
        Register a command.

        Args:
            func: Handler taking the parsed namespace
            metadata: Command metadata
            configure: Callback adding the command's arguments to its sub-parser

        Returns:
            str: The command identifier

        Raises:
            ValueError: If the handler signature is wrong
            RuntimeError: If the name or an alias is already taken
        """
        if not validate_handler_signature(func):
            raise ValueError(f"Command {metadata.name} must take exactly one argument")

        registered = RegisteredCommand(function=func, metadata=metadata, configure=configure)
        command_id = registered.identifier

        for name in [metadata.name, *metadata.aliases]:
            if name in self._names:
                raise RuntimeError(f"Command name '{name}' is already registered")

        self._commands[command_id] = registered
        for name in [metadata.name, *metadata.aliases]:
            self._names[name] = command_id
        self._categories[metadata.category].append(command_id)

        self._logger.debug(f"Registered command: {command_id} ({metadata.category.value})")
        return command_id

    def get_command(self, name: str) -> Optional[RegisteredCommand]:
        """Get a command by name or alias."""
        command_id = self._names.get(name)
        return self._commands.get(command_id) if command_id else None

    def get_all_commands(self) -> List[RegisteredCommand]:
        return list(self._commands.values())

    def get_commands_by_category(self, category: CommandCategory) -> List[RegisteredCommand]:
        return [self._commands[cid] for cid in self._categories.get(category, [])]

    def build_parser(self) -> argparse.ArgumentParser:
        """
        Build the top-level parser with one sub-parser per visible command.

        Returns:
            argparse.ArgumentParser with a required subcommand
        """
        parser = argparse.ArgumentParser(
            prog=self.prog,
            description="Quantum dense key distribution security laboratory.",
        )
        parser.add_argument(
            "--log-level",
            default=None,
            choices=["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"],
            help="diagnostics level on standard error",
        )
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

        for category in CommandCategory:
            for registered in self.get_commands_by_category(category):
                metadata = registered.metadata
                if metadata.hidden:
                    continue
                epilog = None
                if metadata.examples:
                    epilog = "examples:\n" + "\n".join(f"  {e}" for e in metadata.examples)
                sub = subparsers.add_parser(
                    metadata.name,
                    aliases=metadata.aliases,
                    usage=metadata.usage,
                    help=metadata.description,
                    description=metadata.description,
                    epilog=epilog,
                    formatter_class=argparse.RawDescriptionHelpFormatter,
                )
                if registered.configure:
                    registered.configure(sub)
                sub.set_defaults(_command_id=registered.identifier)

        return parser

    def _record(self, registered: RegisteredCommand, started: float, failed: bool) -> None:
        stats = registered.stats
        duration = time.perf_counter() - started
        stats.calls += 1
        if failed:
            stats.errors += 1
        stats.avg_duration = (stats.avg_duration * (stats.calls - 1) + duration) / stats.calls
        stats.last_called = time.time()

    def dispatch(self, argv: Optional[Sequence[str]] = None) -> ExitCode:
        """
        Parse arguments and run the selected command.

        Exceptions map to exit codes: OSError → 1, SessionAbortedError → 3,
        any other LabError or ValueError → 2. Argument errors exit with 2.

        Args:
            argv: Arguments without the program name; defaults to sys.argv

        Returns:
            ExitCode of the command
        """
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return ExitCode.OK if e.code in (0, None) else ExitCode.INVALID_INPUT

        if args.log_level:
            setup_logger(args.log_level)

        registered = self._commands[args._command_id]
        with command_context(registered.metadata.name):
            return self._run(registered, args)

    def _run(self, registered: RegisteredCommand, args: argparse.Namespace) -> ExitCode:
        started = time.perf_counter()
        failed = True
        try:
            code = ExitCode(registered.function(args))
            failed = False
            return code
        except SessionAbortedError as e:
            self._logger.error(f"❌ {e}")
            return ExitCode.INSECURE
        except OSError as e:
            self._logger.error(f"❌ I/O error: {e}")
            return ExitCode.IO_ERROR
        except (LabError, ValueError) as e:
            self._logger.error(f"❌ {e}")
            return ExitCode.INVALID_INPUT
        finally:
            self._record(registered, started, failed)
            self._logger.debug(f"Finished in {time.perf_counter() - started:.3f}s")

    def get_stats_summary(self) -> Dict[str, Any]:
        total_calls = sum(c.stats.calls for c in self._commands.values())
        total_errors = sum(c.stats.errors for c in self._commands.values())
        return {
            "total_commands": len(self._commands),
            "total_calls": total_calls,
            "total_errors": total_errors,
            "error_rate": total_errors / total_calls if total_calls > 0 else 0,
        }


# Global registry instance
_global_registry: Optional[CommandsRegistry] = None


def get_registry() -> CommandsRegistry:
    """Get the global commands registry instance."""
    global _global_registry
    if _global_registry is None:
        _global_registry = CommandsRegistry()
    return _global_registry


def set_registry(registry: CommandsRegistry) -> None:
    """Set the global commands registry instance."""
    global _global_registry
    _global_registry = registry
