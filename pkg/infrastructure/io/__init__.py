"""
File and stream I/O.

Contains the custom attack file parser and the JSON/CSV result writers.
"""

from .attack_file import (
    AttackMatrices,
    format_attack_text,
    load_attack_file,
    parse_attack_text,
    write_attack_file,
)
from .writers import emit, format_number, to_csv_text, to_json_text, write_csv, write_json

__all__ = [
    # Attack files
    "AttackMatrices",
    "format_attack_text",
    "load_attack_file",
    "parse_attack_text",
    "write_attack_file",
    # Writers
    "emit",
    "format_number",
    "to_csv_text",
    "to_json_text",
    "write_csv",
    "write_json",
]
