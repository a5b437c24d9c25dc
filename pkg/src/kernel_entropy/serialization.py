"""CSV and JSON writers for profiles and reports."""
from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Iterable, Sequence


def format_number(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (int,)) and not isinstance(v, bool):
        return str(v)
    v = float(v)
    if math.isnan(v):
        return "nan"
    return format(v, ".17g")


def parse_number(s: str):
    if s == "":
        return None
    if "/" in s:
        return Fraction(s)
    if s == "-0":
        # a float negative zero; int("-0") would drop the sign
        return -0.0
    try:
        return int(s)
    except ValueError:
        return float(s)


def write_csv(header: Sequence[str], rows: Iterable[Sequence], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_number(v) for v in row])


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    write_csv(header, rows, buf)
    return buf.getvalue()


def read_csv(text: str) -> tuple[list[str], list[list]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return header, [[parse_number(v) for v in row] for row in reader]


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if hasattr(o, "item"):
        return o.item()
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_default, allow_nan=True) + "\n"
