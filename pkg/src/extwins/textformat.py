"""Parser for the line-oriented ``key: value`` input files.

A key either carries an inline value or opens a block of indented rows::

    dimension: 2
    vertices:
      -1 0
      0 -1/2

Comments start with ``#``.  Errors report the line number and field.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path


class ParseError(ValueError):
    def __init__(self, line: int | None, fld: str | None, message: str, source: str = "<input>"):
        where = f"{source}:{line}" if line else source
        if fld:
            where += f": field '{fld}'"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.field = fld


@dataclass
class Entry:
    line: int
    value: str | None = None
    rows: list[tuple[int, list[str]]] = field(default_factory=list)


@dataclass
class Document:
    entries: dict[str, Entry]
    source: str = "<input>"

    def has(self, key: str) -> bool:
        return key in self.entries

    def error(self, key: str | None, message: str, line: int | None = None):
        if line is None and key in self.entries:
            line = self.entries[key].line
        return ParseError(line, key, message, self.source)

    def require(self, key: str) -> Entry:
        if key not in self.entries:
            raise ParseError(None, key, "missing required field", self.source)
        return self.entries[key]

    def text(self, key: str, default: str | None = None) -> str | None:
        if key not in self.entries:
            return default
        e = self.entries[key]
        if e.value is None:
            raise self.error(key, "expected an inline value")
        return e.value

    def scalar(self, key: str, default=None) -> Fraction | None:
        if key not in self.entries:
            if default is None:
                self.require(key)
            return default
        e = self.entries[key]
        if e.value is None:
            raise self.error(key, "expected an inline value")
        return parse_rational(e.value, self, key, e.line)

    def integer(self, key: str, default=None) -> int | None:
        v = self.scalar(key, default)
        if v is None:
            return None
        if v.denominator != 1:
            raise self.error(key, f"expected an integer, got {v}")
        return int(v)

    def scalars(self, key: str) -> list[Fraction] | None:
        """An inline whitespace-separated list of rationals."""
        if key not in self.entries:
            return None
        e = self.entries[key]
        if e.value is None:
            raise self.error(key, "expected an inline list of numbers")
        return [parse_rational(tok, self, key, e.line) for tok in e.value.split()]

    def matrix(self, key: str, width: int | None = None) -> list[list[Fraction]] | None:
        if key not in self.entries:
            return None
        e = self.entries[key]
        if e.value:
            raise self.error(key, "expected an indented block of rows")
        out = []
        for line, toks in e.rows:
            if width is not None and len(toks) != width:
                raise self.error(key, f"expected {width} entries, got {len(toks)}", line)
            out.append([parse_rational(t, self, key, line) for t in toks])
        return out


def parse_rational(token: str, doc: Document | None = None, key: str | None = None,
                   line: int | None = None) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        msg = f"not an exact rational: {token!r}"
        if doc is not None:
            raise doc.error(key, msg, line) from None
        raise ParseError(line, key, msg) from None


def parse_document(text: str, source: str = "<input>") -> Document:
    entries: dict[str, Entry] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        if body[0] in " \t":
            if current is None or entries[current].value:
                raise ParseError(lineno, current, "indented row outside a block", source)
            toks = body.replace(",", " ").split()
            entries[current].rows.append((lineno, toks))
            continue
        if ":" not in body:
            raise ParseError(lineno, None, f"expected 'key: value', got {body.strip()!r}", source)
        key, _, value = body.partition(":")
        key = key.strip()
        if not key:
            raise ParseError(lineno, None, "empty field name", source)
        if key in entries:
            raise ParseError(lineno, key, "duplicate field", source)
        entries[key] = Entry(lineno, value.strip() or None)
        current = key
    return Document(entries, source)


def read_document(path: str | Path) -> Document:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(None, None, f"cannot read file: {exc.strerror}", str(p)) from None
    return parse_document(text, str(p))
