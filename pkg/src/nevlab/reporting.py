"""Report emission: CSV with a fixed column order and 12-significant-digit
floats, or JSON mirroring the same columns.  Metadata rides as '# ' comment
lines ahead of the CSV header and as a 'meta' object in JSON."""
from __future__ import annotations

import json
from typing import Mapping, Sequence


def fmt_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _csv_field(text: str) -> str:
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def to_csv(meta: Mapping[str, object], columns: Sequence[str],
           rows: Sequence[Mapping[str, object]]) -> str:
    lines = [f"# {key}={fmt_value(value)}" for key, value in meta.items()]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_csv_field(fmt_value(row[c])) for c in columns))
    return "\n".join(lines) + "\n"


def to_json(meta: Mapping[str, object], columns: Sequence[str],
            rows: Sequence[Mapping[str, object]]) -> str:
    def clean(value):
        if isinstance(value, float):
            return float(f"{value:.12g}")
        if isinstance(value, bool) or isinstance(value, (int, str)):
            return value
        return str(value)

    payload = {
        "meta": {k: clean(v) for k, v in meta.items()},
        "columns": list(columns),
        "rows": [{c: clean(row[c]) for c in columns} for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def emit(kind: str, meta: Mapping[str, object], columns: Sequence[str],
         rows: Sequence[Mapping[str, object]]) -> str:
    if kind == "csv":
        return to_csv(meta, columns, rows)
    if kind == "json":
        return to_json(meta, columns, rows)
    raise ValueError(f"unknown output format {kind!r}")
