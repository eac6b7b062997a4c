"""Machine-readable report format shared by the CLI and the sweep.

Every ``--json`` payload is one JSON object carrying ``schema`` and
``command`` keys.  Findings files are JSON Lines: a header object first,
then one record per spec, so partial results survive interruption.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator, TextIO

SCHEMA = "geodetic-report/1"


class ReportError(ValueError):
    """Raised when a report or findings file does not match the schema."""


def make_report(command: str, payload: dict) -> dict:
    report = {"schema": SCHEMA, "command": command}
    report.update(payload)
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)


def load_report(text: str) -> dict:
    """Parse and check one report object (the round-trip reader)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ReportError("report must be a JSON object")
    if data.get("schema") != SCHEMA:
        raise ReportError(f"unsupported schema {data.get('schema')!r}, expected {SCHEMA!r}")
    if "command" not in data:
        raise ReportError("report is missing its command field")
    return data


def write_findings(out: TextIO, header: dict, records: Iterable[dict]) -> int:
    """Stream a findings file: header line, then one record per line."""
    out.write(json.dumps(make_report("sweep-findings", header)) + "\n")
    written = 0
    for record in records:
        out.write(json.dumps(record) + "\n")
        written += 1
    return written


def read_findings(path: str | Path) -> tuple[dict, list[dict]]:
    header: dict | None = None
    records: list[dict] = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        if header is None:
            header = load_report(line)
        else:
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ReportError(f"line {lineno}: not valid JSON: {exc}") from None
    if header is None:
        raise ReportError("findings file has no header line")
    return header, records


def iter_findings(path: str | Path) -> Iterator[dict]:
    _, records = read_findings(path)
    yield from records
