"""Deterministic CSV/JSON reports with an exactness tag beside every number."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactnum import Interval, Poly, RationalFunction, RootInterval
from ..exactnum.roots import format_decimal, format_sci


def cell(value, digits: int) -> tuple[str, str]:
    """(text, exactness tag) for one numeric value."""
    if value is None:
        return "", ""
    if isinstance(value, RootInterval):
        if value.is_rational:
            return str(value.exact), "exact"
        r = value.refine(Fraction(1, 10**digits))
        return format_decimal(r.midpoint, digits), f"interval±{format_sci(r.width / 2)}"
    if isinstance(value, Interval):
        if value.lo == value.hi:
            return str(value.lo), "exact"
        mid = (value.lo + value.hi) / 2
        return format_decimal(mid, digits), f"interval±{format_sci(value.width / 2)}"
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return str(Fraction(value)), "exact"
    if isinstance(value, (Poly, RationalFunction)):
        return str(value), "exact"
    raise TypeError(f"not a numeric cell: {value!r}")


def _plain(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class Report:
    command: str
    numeric: tuple[str, ...]
    text: tuple[str, ...] = ()
    rows: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    digits: int = 12

    @property
    def columns(self) -> list[str]:
        cols = []
        for name in self.numeric:
            cols += [name, f"{name}_cert"]
        return cols + list(self.text)

    def add(self, **values) -> None:
        unknown = set(values) - set(self.numeric) - set(self.text)
        if unknown:
            raise KeyError(f"unknown report columns {sorted(unknown)}")
        self.rows.append(values)

    def note(self, message: str) -> None:
        self.notes.append(message)

    def _cells(self, row: dict) -> list[str]:
        out = []
        for name in self.numeric:
            out += list(cell(row.get(name), self.digits))
        out += [_plain(row.get(name)) for name in self.text]
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# extwins {self.command}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow(self._cells(row))
        for n in self.notes:
            buf.write(f"# {n}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        cols = self.columns
        rows = [dict(zip(cols, self._cells(r))) for r in self.rows]
        doc = {"command": self.command, "columns": cols, "rows": rows, "notes": self.notes}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()
