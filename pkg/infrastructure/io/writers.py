"""
Result writers: JSON documents and CSV tables, to a file or standard output.

JSON floats use Python's shortest round-trip repr and CSV floats use 17
significant digits, so equal inputs always give byte-identical output.
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional, Sequence

import numpy as np

from core.utils.logger import get_logger

logger = get_logger()


def _plain(value: Any) -> Any:
    """Convert numpy scalars and arrays to JSON-native values."""
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def format_number(value: Any) -> str:
    """CSV cell text: 17 significant digits for floats, blanks for None."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def to_json_text(payload: Mapping[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False, default=_plain) + "\n"


def to_csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(cell) for cell in row])
    return buffer.getvalue()


def emit(text: str, out: Optional[Path | str] = None) -> None:
    """
    Write text to a path, or to standard output when no path is given.

    Raises:
        OSError: If the path cannot be written
    """
    if out is None or str(out) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(out)
    path.write_text(text, encoding="utf-8")
    logger.debug(f"Wrote {len(text)} characters to {path}")


def write_json(payload: Mapping[str, Any], out: Optional[Path | str] = None) -> None:
    emit(to_json_text(payload), out)


def write_csv(
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    out: Optional[Path | str] = None,
) -> None:
    emit(to_csv_text(header, rows), out)


__all__ = [
    "emit",
    "format_number",
    "to_csv_text",
    "to_json_text",
    "write_csv",
    "write_json",
]
