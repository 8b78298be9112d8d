"""
Custom attack file format.

    # optional comments
    dim 6
    J
    re im  re im  ...      (N rows of N complex entries, row-major)
    K
    re im  re im  ...

Entries are whitespace separated and may wrap across lines freely; only
their count matters. Every parse error reports the offending line.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, List, Tuple

import numpy as np

from core.errors import AttackFileError
from core.qmath import ComplexMatrix
from core.utils.logger import get_logger

logger = get_logger()

MATRIX_LABELS = ("J", "K")


@dataclass(frozen=True, eq=False)
class AttackMatrices:
    """Raw J and K read from a file, not yet checked for unitarity."""

    dim: int
    j: ComplexMatrix
    k: ComplexMatrix
    name: str = "custom_file"


def _tokens(text: str) -> Iterator[Tuple[int, str]]:
    for line_no, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0]
        for token in content.split():
            yield line_no, token


def _read_matrix(
    tokens: List[Tuple[int, str]], pos: int, dim: int, label: str
) -> Tuple[ComplexMatrix, int]:
    needed = 2 * dim * dim
    values: List[float] = []
    while len(values) < needed:
        if pos >= len(tokens):
            last_line = tokens[-1][0] if tokens else None
            raise AttackFileError(
                f"matrix {label} ends after {len(values) // 2} of {dim * dim} entries",
                line=last_line,
            )
        line_no, token = tokens[pos]
        if token in MATRIX_LABELS:
            raise AttackFileError(
                f"matrix {label} has {len(values) // 2} of {dim * dim} entries "
                f"before label {token}",
                line=line_no,
            )
        try:
            values.append(float(token))
        except ValueError as e:
            raise AttackFileError(f"cannot parse {token!r} as a number", line=line_no) from e
        pos += 1

    pairs = np.asarray(values, dtype=np.float64).reshape(dim, dim, 2)
    return pairs[..., 0] + 1j * pairs[..., 1], pos


def parse_attack_text(text: str, name: str = "custom_file") -> AttackMatrices:
    """
    Parse the attack file format.

    Args:
        text: File contents
        name: Label attached to the result

    Returns:
        AttackMatrices with J and K as complex arrays

    Raises:
        AttackFileError: On any syntax or size problem, with its line number
    """
    tokens = list(_tokens(text))
    if len(tokens) < 2 or tokens[0][1] != "dim":
        line = tokens[0][0] if tokens else 1
        raise AttackFileError("file must start with 'dim <N>'", line=line)

    dim_line, dim_token = tokens[1]
    try:
        dim = int(dim_token)
    except ValueError as e:
        raise AttackFileError(f"dimension {dim_token!r} is not an integer", line=dim_line) from e
    if dim < 1:
        raise AttackFileError(f"dimension must be positive, got {dim}", line=dim_line)

    matrices = {}
    pos = 2
    for label in MATRIX_LABELS:
        if pos >= len(tokens):
            raise AttackFileError(f"missing matrix {label}", line=tokens[-1][0])
        line_no, token = tokens[pos]
        if token != label:
            raise AttackFileError(f"expected label {label}, found {token!r}", line=line_no)
        matrices[label], pos = _read_matrix(tokens, pos + 1, dim, label)

    if pos < len(tokens):
        line_no, token = tokens[pos]
        raise AttackFileError(f"unexpected trailing token {token!r}", line=line_no)

    return AttackMatrices(dim=dim, j=matrices["J"], k=matrices["K"], name=name)


def load_attack_file(path: Path | str) -> AttackMatrices:
    """Read and parse an attack file; OSError propagates to the caller."""
    path = Path(path)
    matrices = parse_attack_text(path.read_text(encoding="utf-8"), name=path.stem)
    logger.debug(f"Loaded attack matrices of dimension {matrices.dim} from {path}")
    return matrices


def format_attack_text(j: ComplexMatrix, k: ComplexMatrix) -> str:
    """Serialize J and K in the attack file format with exact float reprs."""
    lines = [f"dim {j.shape[0]}"]
    for label, m in zip(MATRIX_LABELS, (j, k)):
        lines.append(label)
        for row in np.asarray(m, dtype=np.complex128):
            lines.append("  ".join(f"{float(z.real)!r} {float(z.imag)!r}" for z in row))
    return "\n".join(lines) + "\n"


def write_attack_file(path: Path | str, j: ComplexMatrix, k: ComplexMatrix) -> None:
    Path(path).write_text(format_attack_text(j, k), encoding="utf-8")


__all__ = [
    "AttackMatrices",
    "format_attack_text",
    "load_attack_file",
    "parse_attack_text",
    "write_attack_file",
]
