"""CSV ingestion for 2x2 tables and proportion samples.

Both formats require a header row. Numbers are parsed locale-independently
and digit grouping ("1 000", "1,000", "1_000") is rejected.
"""

from __future__ import annotations

import csv
import re
from pathlib import Path
from typing import NamedTuple

from .contingency import TwoByTwoTable
from .continuous import ProportionSample
from .errors import ParseError

TABLE_HEADER = ("label", "a", "b", "c", "d")
SAMPLE_HEADER = ("label", "value")

_INT_RE = re.compile(r"[0-9]+")
_FLOAT_RE = re.compile(r"[+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?")


class LabeledTable(NamedTuple):
    label: str
    table: TwoByTwoTable


def _rows(path, header):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        first = next(reader, None)
        if first is None:
            raise ParseError(f"missing header row {','.join(header)}", line=1)
        if tuple(cell.strip() for cell in first) != header:
            raise ParseError(
                f"expected header {','.join(header)}, got {','.join(first)}", line=reader.line_num
            )
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, got {len(row)}", line=reader.line_num
                )
            yield reader.line_num, row


def read_table_csv(path: str | Path) -> list[LabeledTable]:
    """Read ``label,a,b,c,d`` rows; labels are kept verbatim.

    Zero counts are accepted here and rejected later by the analysis.
    """
    tables = []
    for line, row in _rows(path, TABLE_HEADER):
        label = row[0]
        counts = []
        for name, raw in zip(TABLE_HEADER[1:], row[1:]):
            text = raw.strip()
            if not _INT_RE.fullmatch(text):
                raise ParseError(
                    f"count {name}={raw!r} is not a nonnegative integer", line=line
                )
            counts.append(int(text))
        tables.append(LabeledTable(label, TwoByTwoTable(*counts)))
    return tables


def read_sample_csv(path: str | Path) -> list[ProportionSample]:
    """Read ``label,value`` rows into one sample per label, in first-seen order."""
    grouped: dict[str, list[float]] = {}
    for line, (label, raw) in _rows(path, SAMPLE_HEADER):
        text = raw.strip()
        if not _FLOAT_RE.fullmatch(text):
            raise ParseError(f"value {raw!r} is not a decimal number", line=line)
        value = float(text)
        if not (0.0 < value < 1.0):
            raise ParseError(
                f"value {value!r} for {label!r} must lie strictly between 0 and 1", line=line
            )
        grouped.setdefault(label, []).append(value)
    return [ProportionSample(tuple(values), label) for label, values in grouped.items()]
