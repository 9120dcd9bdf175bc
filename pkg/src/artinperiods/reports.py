"""CSV / JSON emission of tagged output records.

Every record carries ``schema=1`` and a ``kind`` tag.  CSV output writes one
file per kind (``<stem>_<kind>.csv``); on standard output the kinds follow one
another, each introduced by a ``# kind=<kind>`` line.  JSON output is a single
object holding one array per kind.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

SCHEMA = 1


@dataclass
class OutputRecord:
    kind: str
    fields: dict

    def flat(self) -> dict:
        out = {"schema": SCHEMA, "kind": self.kind}
        for key, value in self.fields.items():
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"non-finite value for {self.kind}.{key}: {value}")
            out[key] = value
        return out


@dataclass
class Report:
    command: str
    config: dict
    records: list[OutputRecord] = field(default_factory=list)

    def add(self, kind: str, **fields) -> None:
        self.records.append(OutputRecord(kind, fields))

    def extend(self, kind: str, rows) -> None:
        for row in rows:
            self.records.append(OutputRecord(kind, dict(row)))

    def by_kind(self) -> dict[str, list[dict]]:
        out: dict[str, list[dict]] = {}
        for rec in self.records:
            out.setdefault(rec.kind, []).append(rec.flat())
        return out

    def to_json(self) -> str:
        doc = {"schema": SCHEMA, "command": self.command, "config": self.config}
        doc.update(self.by_kind())
        return json.dumps(doc, indent=1, allow_nan=False) + "\n"

    def csv_tables(self) -> dict[str, str]:
        tables = {}
        for kind, rows in self.by_kind().items():
            header: list[str] = []
            for row in rows:
                header.extend(k for k in row if k not in header)
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
            tables[kind] = buf.getvalue()
        return tables


def _csv_stem(out: str) -> Path:
    path = Path(out)
    return path.with_suffix("") if path.suffix == ".csv" else path


def write_report(report: Report, fmt: str, out: str | None) -> list[str]:
    """Write ``report``; returns the paths written (empty for stdout)."""
    if fmt == "json":
        text = report.to_json()
        if out in (None, "-"):
            sys.stdout.write(text)
            return []
        Path(out).write_text(text)
        return [out]
    tables = report.csv_tables()
    if out in (None, "-"):
        sys.stdout.write("\n".join(f"# kind={k}\n{t}" for k, t in tables.items()))
        return []
    stem = _csv_stem(out)
    written = []
    for kind, text in tables.items():
        path = stem.parent / f"{stem.name}_{kind}.csv"
        path.write_text(text)
        written.append(str(path))
    return written
