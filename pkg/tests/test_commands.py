import argparse

import pytest

from core.commands import (
    CommandCategory,
    CommandMetadata,
    CommandsRegistry,
    ExitCode,
    command,
    get_command_metadata,
    get_registry,
    is_registered_command,
    set_registry,
)
from core.errors import InvalidParameterError, SessionAbortedError
from core.utils import get_logger


def add_value(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--value", type=int, default=0)


def echo(args: argparse.Namespace) -> ExitCode:
    return ExitCode.OK


@pytest.fixture
def registry():
    return CommandsRegistry(prog="test")


@pytest.fixture
def scratch_registry(registry):
    previous = get_registry()
    set_registry(registry)
    yield registry
    set_registry(previous)


class TestRegistration:
    def test_register_and_lookup(self, registry):
        command_id = registry.register(
            echo, CommandMetadata(name="echo", description="echo", aliases=["e"])
        )
        assert command_id == "cmd_echo"
        assert registry.get_command("echo") is registry.get_command("e")
        assert registry.get_command("missing") is None

    def test_duplicate_name(self, registry):
        registry.register(echo, CommandMetadata(name="echo", description="echo"))
        with pytest.raises(RuntimeError):
            registry.register(echo, CommandMetadata(name="echo", description="again"))

    def test_alias_clash(self, registry):
        registry.register(echo, CommandMetadata(name="echo", description="echo"))
        with pytest.raises(RuntimeError):
            registry.register(echo, CommandMetadata(name="other", description="x", aliases=["echo"]))

    def test_handler_signature(self, registry):
        def two_args(args, extra):
            return ExitCode.OK

        with pytest.raises(ValueError):
            registry.register(two_args, CommandMetadata(name="bad", description="bad"))

    def test_metadata_needs_name(self):
        with pytest.raises(ValueError):
            CommandMetadata(name="", description="nameless")

    def test_categories(self, registry):
        registry.register(echo, CommandMetadata(name="a", description="a"))
        registry.register(
            echo, CommandMetadata(name="b", description="b", category=CommandCategory.SIMULATION)
        )
        names = [c.metadata.name for c in registry.get_commands_by_category(CommandCategory.SIMULATION)]
        assert names == ["b"]


class TestDecorator:
    def test_decorator_registers(self, scratch_registry):
        @command("ping", description="ping", arguments=add_value, examples=["test ping"])
        def ping(args: argparse.Namespace) -> ExitCode:
            return ExitCode.OK if args.value == 0 else ExitCode.INSECURE

        assert is_registered_command(ping)
        assert get_command_metadata(ping).usage is None
        assert scratch_registry.dispatch(["ping"]) == ExitCode.OK
        assert scratch_registry.dispatch(["ping", "--value", "1"]) == ExitCode.INSECURE

    def test_usage_reaches_help(self, registry, capsys):
        registry.register(
            echo,
            CommandMetadata(name="echo", description="echo", usage="test echo [--value N]"),
            add_value,
        )
        registry.register(echo, CommandMetadata(name="plain", description="plain"))

        assert registry.dispatch(["echo", "--help"]) == ExitCode.OK
        assert "usage: test echo [--value N]" in capsys.readouterr().out
        assert registry.dispatch(["plain", "--help"]) == ExitCode.OK
        assert "usage: test plain" in capsys.readouterr().out

    def test_plain_function_is_not_registered(self):
        assert not is_registered_command(echo)
        assert get_command_metadata(echo) is None


class TestDispatch:
    @pytest.mark.parametrize(
        "error,expected",
        [
            (FileNotFoundError("gone"), ExitCode.IO_ERROR),
            (InvalidParameterError("bad"), ExitCode.INVALID_INPUT),
            (ValueError("bad"), ExitCode.INVALID_INPUT),
            (SessionAbortedError("insecure"), ExitCode.INSECURE),
        ],
    )
    def test_errors_map_to_exit_codes(self, registry, error, expected):
        def failing(args):
            raise error

        registry.register(failing, CommandMetadata(name="fail", description="fail"))
        assert registry.dispatch(["fail"]) == expected
        stats = registry.get_command("fail").stats
        assert (stats.calls, stats.errors) == (1, 1)

    def test_unexpected_errors_propagate(self, registry):
        def broken(args):
            raise KeyError("internal")

        registry.register(broken, CommandMetadata(name="broken", description="broken"))
        with pytest.raises(KeyError):
            registry.dispatch(["broken"])

    def test_hidden_commands_are_not_parsed(self, registry):
        registry.register(echo, CommandMetadata(name="secret", description="s", hidden=True))
        registry.register(echo, CommandMetadata(name="echo", description="e"))
        assert registry.dispatch(["secret"]) == ExitCode.INVALID_INPUT
        assert registry.dispatch(["echo"]) == ExitCode.OK

    def test_stats_summary(self, registry):
        registry.register(echo, CommandMetadata(name="echo", description="e"))
        registry.dispatch(["echo"])
        registry.dispatch(["echo"])
        summary = registry.get_stats_summary()
        assert summary["total_calls"] == 2
        assert summary["total_errors"] == 0
        assert registry.get_command("echo").stats.avg_duration >= 0.0

    def test_records_carry_command_name(self, registry):
        logger = get_logger()

        def ping(args):
            logger.info("inside")
            return ExitCode.OK

        seen = []
        registry.register(ping, CommandMetadata(name="ping", description="p"))
        sink = logger.add(lambda message: seen.append(message.record["extra"].get("command")))
        try:
            registry.dispatch(["ping"])
        finally:
            logger.remove(sink)
        assert "ping" in seen
