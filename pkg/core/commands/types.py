"""
Type definitions for the commands registry system.
Provides enums, exit codes, and data structures for command management.
"""

import argparse
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Callable, Dict, List, Optional


class ExitCode(IntEnum):
    """Process exit codes, stable for scripts."""

    OK = 0
    IO_ERROR = 1
    INVALID_INPUT = 2
    INSECURE = 3  # insecure verdict or aborted session


class CommandCategory(Enum):
    """Categories for organizing commands in help output."""

    ANALYSIS = "analysis"  # Closed-form bounds and verdicts
    SIMULATION = "simulation"  # Attack evaluation and Monte Carlo sessions


@dataclass
class CommandMetadata:
    """Metadata for a registered command."""

    name: str
    description: str
    category: CommandCategory = CommandCategory.ANALYSIS
    aliases: List[str] = field(default_factory=list)
    usage: Optional[str] = None
    examples: List[str] = field(default_factory=list)
    hidden: bool = False

    def __post_init__(self):
        if not self.name:
            raise ValueError("Commands must specify a name")


@dataclass
class CommandStats:
    """Statistics for command usage."""

    calls: int = 0
    errors: int = 0
    last_called: Optional[float] = None  # Unix timestamp
    avg_duration: float = 0.0


CommandFunction = Callable[[argparse.Namespace], ExitCode]
ParserConfigurator = Callable[[argparse.ArgumentParser], None]
CommandTable = Dict[str, "RegisteredCommand"]


@dataclass
class RegisteredCommand:
    """Container for a registered command with its metadata and parser setup."""

    function: CommandFunction
    metadata: CommandMetadata
    configure: Optional[ParserConfigurator] = None
    stats: CommandStats = field(default_factory=CommandStats)

    @property
    def identifier(self) -> str:
        return f"cmd_{self.metadata.name}"

    def __str__(self) -> str:
        return f"Command({self.metadata.name}, {self.metadata.category.value})"
