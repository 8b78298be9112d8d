import json

import numpy as np
import pytest

from application.attacks import BuiltinAttack, builtin_attack, random_attack
from core.errors import AttackFileError, DimensionMismatchError, NotUnitaryError
from core.qmath import identity
from infrastructure.io import (
    format_attack_text,
    format_number,
    load_attack_file,
    parse_attack_text,
    to_csv_text,
    to_json_text,
    write_attack_file,
)


def identity_text(dim: int) -> str:
    eye = identity(dim)
    return format_attack_text(eye, eye)


class TestAttackFile:
    def test_parse_identity(self):
        matrices = parse_attack_text(identity_text(2), name="eye")
        assert matrices.dim == 2
        assert matrices.name == "eye"
        np.testing.assert_array_equal(matrices.j, identity(2))
        np.testing.assert_array_equal(matrices.k, identity(2))

    def test_comments_and_wrapping(self):
        text = """
        # two-level swap
        dim 2
        J  0 0 1 0
           1 0 0 0   # row two
        K
        1 0 0 0 0 0 1 0
        """
        matrices = parse_attack_text(text)
        np.testing.assert_array_equal(matrices.j, [[0, 1], [1, 0]])

    def test_exact_float_reprs(self, space, rng):
        attack = random_attack(space, rng)
        matrices = parse_attack_text(format_attack_text(attack.j, attack.k))
        np.testing.assert_array_equal(matrices.j, attack.j)
        np.testing.assert_array_equal(matrices.k, attack.k)

    @pytest.mark.parametrize(
        "text,line",
        [
            ("size 2\nJ\n", 1),
            ("dim two\n", 1),
            ("dim 1\nJ\n1 0\nX\n1 0\n", 4),
            ("dim 1\nJ\n1 0\nK\n1\n", 5),
            ("dim 2\nJ\n1 0 0 0\nK\n", 4),
            ("dim 1\nJ\n1 zero\nK\n1 0\n", 3),
            ("dim 1\nJ\n1 0\nK\n1 0\n\n7\n", 7),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(AttackFileError) as info:
            parse_attack_text(text)
        assert info.value.line == line

    def test_load_file_uses_stem_as_name(self, tmp_path):
        path = tmp_path / "eye.txt"
        path.write_text(identity_text(3))
        assert load_attack_file(path).name == "eye"

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_attack_file(tmp_path / "absent.txt")

    def test_custom_file_attack(self, space, tmp_path):
        swap = builtin_attack("vacuum_swap", space)
        path = tmp_path / "swap.txt"
        write_attack_file(path, swap.j, swap.k)
        attack = builtin_attack(BuiltinAttack.CUSTOM_FILE, space, path=path)
        assert attack.name == "swap"
        np.testing.assert_array_equal(attack.j, swap.j)

    def test_custom_file_must_be_unitary(self, space, tmp_path):
        j = identity(space.be_dim)
        j[3, 3] = 0.5
        path = tmp_path / "bad.txt"
        write_attack_file(path, j, identity(space.be_dim))
        with pytest.raises(NotUnitaryError):
            builtin_attack(BuiltinAttack.CUSTOM_FILE, space, path=path)

    def test_custom_file_must_match_space(self, space, tmp_path):
        path = tmp_path / "small.txt"
        path.write_text(identity_text(4))
        with pytest.raises(DimensionMismatchError):
            builtin_attack(BuiltinAttack.CUSTOM_FILE, space, path=path)


class TestWriters:
    def test_number_formatting(self):
        assert format_number(None) == ""
        assert format_number(True) == "1"
        assert format_number(0.0) == "0"
        assert format_number(0.1) == "0.10000000000000001"
        assert format_number(np.float64(1.0)) == "1"
        assert format_number(7) == "7"

    def test_csv(self):
        text = to_csv_text(("a", "b"), [(0.5, None), (1, "x")])
        assert text == "a,b\n0.5,\n1,x\n"

    def test_json_converts_numpy(self):
        text = to_json_text({"x": np.float64(0.25), "n": np.int64(3), "ok": np.bool_(True)})
        assert json.loads(text) == {"x": 0.25, "n": 3, "ok": True}
        assert text.endswith("}\n")

    def test_json_rejects_unknown_objects(self):
        with pytest.raises(TypeError):
            to_json_text({"x": object()})
