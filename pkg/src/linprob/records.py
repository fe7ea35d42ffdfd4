"""Line-oriented key=value records used for structured CLI output.

One record per line, fields separated by tabs, each field ``key=value``.
Floats are written with ``repr`` (shortest exact round trip), strings and
lists as JSON, booleans as ``true``/``false``. Parsing a record and
formatting it again reproduces the original line byte for byte.
"""

from __future__ import annotations

import enum
import json
import re

_INT_RE = re.compile(r"-?[0-9]+")


def _encode(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, enum.Enum):
        value = value.value
    if isinstance(value, tuple):
        value = list(value)
    return json.dumps(value)


def _decode(text):
    if text in ("true", "false"):
        return text == "true"
    if text[:1] in ('"', "["):
        return json.loads(text)
    if _INT_RE.fullmatch(text):
        return int(text)
    return float(text)


def format_record(fields: dict) -> str:
    parts = []
    for key, value in fields.items():
        if "=" in key or "\t" in key:
            raise ValueError(f"invalid record key {key!r}")
        parts.append(f"{key}={_encode(value)}")
    return "\t".join(parts)


def parse_record(line: str) -> dict:
    fields = {}
    for part in line.rstrip("\n").split("\t"):
        key, sep, raw = part.partition("=")
        if not sep:
            raise ValueError(f"malformed field {part!r}")
        fields[key] = _decode(raw)
    return fields


def format_records(records) -> str:
    return "".join(format_record(r) + "\n" for r in records)


def parse_records(text: str) -> list[dict]:
    return [parse_record(line) for line in text.splitlines() if line]
