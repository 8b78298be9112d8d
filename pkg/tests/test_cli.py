import json

import pytest

from core.commands import ExitCode
from core.qmath import identity
from infrastructure.io import write_attack_file

H_03 = 0.8812908992306927


def run(cli, capsys, *argv):
    code = cli(list(argv))
    return code, capsys.readouterr().out


def run_json(cli, capsys, *argv):
    code, out = run(cli, capsys, *argv)
    return code, json.loads(out)


class TestParser:
    def test_help_exits_cleanly(self, cli, capsys):
        code, out = run(cli, capsys, "--help")
        assert code == ExitCode.OK
        for name in ("bounds", "surface", "attack-eval", "simulate", "analyze"):
            assert name in out

    def test_unknown_command(self, cli, capsys):
        assert cli(["teleport"]) == ExitCode.INVALID_INPUT

    def test_missing_required_flag(self, cli, capsys):
        assert cli(["analyze", "--p-loss", "0.1"]) == ExitCode.INVALID_INPUT


class TestBoundsCommand:
    @pytest.mark.parametrize("p,expected", [(0.5, 0.0), (0.2, 1.0), (0.35, H_03)])
    def test_maximize(self, cli, capsys, p, expected):
        code, payload = run_json(cli, capsys, "bounds", "--p01", str(p), "--p10", str(p), "--maximize")
        assert code == ExitCode.OK
        assert payload["be"]["value"] == pytest.approx(expected, abs=1e-4)
        assert payload["ae"]["value"] == pytest.approx(expected, abs=1e-4)

    def test_maximize_with_verify(self, cli, capsys):
        code, payload = run_json(
            cli, capsys,
            "bounds", "--p01", "0.3", "--p10", "0.4", "--maximize", "--verify", "--grid-step", "0.01",
        )
        assert code == ExitCode.OK
        for surface in ("be", "ae"):
            assert payload[surface]["grid_deviation"] < 1e-4

    def test_point(self, cli, capsys):
        code, payload = run_json(
            cli, capsys, "bounds", "--p01", "0.3", "--p10", "0.3", "--c", "1", "--d", "-1"
        )
        assert code == ExitCode.OK
        assert payload["p"] == pytest.approx(-0.2)
        assert payload["q"] == pytest.approx(0.0)
        assert len(payload["lambdas"]) == 4
        assert payload["i_be"] == pytest.approx(payload["i_ae"])

    def test_needs_point_or_maximize(self, cli, capsys):
        assert cli(["bounds", "--p01", "0.3", "--p10", "0.3"]) == ExitCode.INVALID_INPUT

    def test_out_of_domain(self, cli, capsys):
        assert cli(["bounds", "--p01", "0.7", "--p10", "0.3", "--maximize"]) == ExitCode.INVALID_INPUT
        assert (
            cli(["bounds", "--p01", "0.3", "--p10", "0.3", "--c", "2", "--d", "0"])
            == ExitCode.INVALID_INPUT
        )


class TestSurfaceCommand:
    def test_small_grid_to_stdout(self, cli, capsys):
        code, out = run(cli, capsys, "surface", "--which", "be", "--grid", "3")
        lines = out.splitlines()
        assert code == ExitCode.OK
        assert lines[0] == "p01,p10,value"
        assert len(lines) == 10
        assert lines[1] == "0,0,1"
        assert lines[-1] == "0.5,0.5,0"

    def test_to_file_prints_row_count(self, cli, capsys, tmp_path):
        path = tmp_path / "ae.csv"
        code, out = run(cli, capsys, "surface", "--which", "ae", "--grid", "4", "--out", str(path))
        assert code == ExitCode.OK
        assert out.startswith("16 rows")
        assert len(path.read_text().splitlines()) == 17

    def test_unwritable_path(self, cli, capsys, tmp_path):
        path = tmp_path / "missing" / "be.csv"
        assert cli(["surface", "--which", "be", "--grid", "3", "--out", str(path)]) == ExitCode.IO_ERROR

    def test_grid_too_small(self, cli, capsys):
        assert cli(["surface", "--which", "be", "--grid", "1"]) == ExitCode.INVALID_INPUT


class TestAttackEvalCommand:
    def test_identity(self, cli, capsys):
        code, payload = run_json(cli, capsys, "attack-eval", "--name", "identity")
        assert code == ExitCode.OK
        assert payload["c"] == "undefined"
        assert payload["d"] == "undefined"
        assert payload["exact"]["i_be"] == pytest.approx(0.0, abs=1e-9)
        assert payload["exact"]["i_ae"] == pytest.approx(0.0, abs=1e-9)
        assert payload["flagged"] is False

    def test_vacuum_swap(self, cli, capsys):
        code, payload = run_json(cli, capsys, "attack-eval", "--name", "vacuum_swap")
        assert code == ExitCode.OK
        assert payload["p01"] == pytest.approx(0.0, abs=1e-12)
        assert payload["exact"]["i_ae"] == pytest.approx(1.0, abs=1e-9)
        assert payload["closed_form"]["i_be"] == pytest.approx(0.0, abs=1e-9)
        assert payload["flagged"] is True

    def test_intercept_is_flagged(self, cli, capsys):
        code, payload = run_json(cli, capsys, "attack-eval", "--name", "intercept")
        assert code == ExitCode.OK
        assert payload["p_anticorr"] == pytest.approx(0.25)
        assert payload["exact"]["i_be"] == pytest.approx(1.0, abs=1e-9)
        assert payload["flagged"] is True

    def test_non_unitary_file(self, cli, capsys, space, tmp_path):
        j = identity(space.be_dim)
        j[0, 1] = 0.3
        path = tmp_path / "bad.txt"
        write_attack_file(path, j, identity(space.be_dim))
        assert cli(["attack-eval", "--file", str(path)]) == ExitCode.INVALID_INPUT

    def test_missing_file(self, cli, capsys, tmp_path):
        assert cli(["attack-eval", "--file", str(tmp_path / "none.txt")]) == ExitCode.IO_ERROR


class TestSimulateCommand:
    def test_identity_is_secure(self, cli, capsys):
        code, payload = run_json(cli, capsys, "simulate", "--rounds", "3000", "--attack", "identity", "--seed", "11")
        assert code == ExitCode.OK
        assert payload["aborted"] is False
        assert payload["alice_key"] == payload["bob_key"]
        assert payload["verdict"]["secure"] is True

    def test_vacuum_swap_aborts(self, cli, capsys):
        code, payload = run_json(cli, capsys, "simulate", "--rounds", "2000", "--attack", "vacuum_swap")
        assert code == ExitCode.INSECURE
        assert payload["aborted"] is True

    def test_bob_to_alice_intercept_reports_exposure(self, cli, capsys):
        code, payload = run_json(
            cli, capsys,
            "simulate", "--rounds", "20000", "--attack", "intercept", "--seed", "3",
            "--mode", "bob_to_alice", "--message", "1011",
        )
        assert code == ExitCode.INSECURE
        assert payload["exposed_bits"] > 0

    def test_mixture_and_trace(self, cli, capsys, tmp_path):
        trace = tmp_path / "trace.csv"
        code, payload = run_json(
            cli, capsys,
            "simulate", "--rounds", "500", "--mix", "identity:0.9", "--mix", "bitflip:0.1",
            "--trace", str(trace),
        )
        assert code in (ExitCode.OK, ExitCode.INSECURE)
        assert payload["rounds_executed"] == 500
        assert len(trace.read_text().splitlines()) == 501

    @pytest.mark.parametrize(
        "argv",
        [
            ["--mode", "bob_to_alice"],
            ["--mode", "alice_to_bob", "--message", "10x"],
            ["--mix", "identity:0.5"],
            ["--mix", "identity"],
            ["--attack", "identity", "--mix", "identity:1"],
            ["--check-probability", "1.5"],
        ],
    )
    def test_invalid_configs(self, cli, capsys, argv):
        assert cli(["simulate", "--rounds", "100", *argv]) == ExitCode.INVALID_INPUT

    def test_repeated_runs_are_byte_identical(self, cli, capsys):
        argv = ["simulate", "--rounds", "2000", "--attack", "intercept", "--seed", "99"]
        outputs = {run(cli, capsys, *argv)[1] for _ in range(3)}
        assert len(outputs) == 1


class TestAnalyzeCommand:
    def test_untrusted_experiment_is_insecure(self, cli, capsys):
        code, payload = run_json(cli, capsys, "analyze", "--p-loss", "0.77", "--p-corr", "0.05")
        assert code == ExitCode.INSECURE
        assert payload["verdict"]["p_anticorr"] == pytest.approx(0.09, abs=5e-4)
        assert payload["verdict"]["secure"] is False

    def test_trusted_experiment_is_secure(self, cli, capsys):
        code, payload = run_json(
            cli, capsys, "analyze", "--p-loss", "0.77", "--p-corr", "0.05", "--trusted"
        )
        assert code == ExitCode.OK
        assert payload["verdict"]["p_anticorr"] == pytest.approx(0.475, abs=5e-3)
        assert payload["input"]["trusted"] is True

    def test_lossless(self, cli, capsys):
        code, payload = run_json(cli, capsys, "analyze", "--p-loss", "0", "--p-corr", "0")
        assert code == ExitCode.OK
        assert payload["verdict"]["p_anticorr"] == 0.5

    def test_invalid_probabilities(self, cli, capsys):
        assert cli(["analyze", "--p-loss", "0.9", "--p-corr", "0.3"]) == ExitCode.INVALID_INPUT
