"""
Deterministic CSV / JSON writers for CLI results.

Every table starts with a header naming the tool and its version, so a saved
result file records what produced it.  No timestamps are written; the same
inputs give byte-identical output.
"""

import csv
import json
import math
from typing import Any, Dict, Iterable, List, Sequence, TextIO

from gftlab import __version__

TOOL = "gftlab"


def _cell(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value).lower()
    if isinstance(value, float):
        return repr(value) if math.isfinite(value) else str(value)
    if hasattr(value, "value"):  # enums
        return value.value
    return value


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if hasattr(value, "value") and not isinstance(value, (int, float, str)):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    return value


def write_table(
    rows: Iterable[Dict[str, Any]],
    columns: Sequence[str],
    fmt: str,
    stream: TextIO,
    title: str,
) -> None:
    """
    Write ``rows`` as CSV (version comment line, then a header row) or JSON.

    Parameters
    ----------
    rows:    Mappings keyed by column name.
    columns: Column order; extra keys in a row are ignored.
    fmt:     ``"csv"`` or ``"json"``.
    stream:  Text stream to write to.
    title:   Table name recorded in the header.
    """
    materialized: List[Dict[str, Any]] = [{c: row.get(c) for c in columns} for row in rows]
    if fmt == "json":
        document = {
            "tool": TOOL,
            "version": __version__,
            "table": title,
            "columns": list(columns),
            "rows": [_json_value(r) for r in materialized],
        }
        stream.write(json.dumps(document, indent=2, sort_keys=False) + "\n")
        return
    stream.write(f"# {TOOL} {__version__} {title}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in materialized:
        writer.writerow([_cell(row[c]) for c in columns])


def write_document(document: Dict[str, Any], stream: TextIO) -> None:
    """Write a single JSON document tagged with the tool version."""
    payload = {"tool": TOOL, "version": __version__, **_json_value(document)}
    stream.write(json.dumps(payload, indent=2) + "\n")
