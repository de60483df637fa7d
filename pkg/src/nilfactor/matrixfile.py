"""Matrix files: a field line, a size line, then n rows of n entries.

::

    QQ
    3
    0 0 0
    0 0 0
    0 1/2 0

The JSON form carries the same three fields:
``{"field": "QQ", "n": 3, "rows": [["0", "0", "0"], ...]}``.  Entries may
be JSON integers or strings; they are written back as strings.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .field import Field, parse_field
from .matrix import Matrix


def _parse_size(text: str) -> int:
    try:
        n = int(text.strip())
    except ValueError as exc:
        raise ParseError(f"bad size line {text!r}") from exc
    if n < 0:
        raise ParseError(f"size must be non-negative, got {n}")
    return n


def _build(field: Field, n: int, rows: list) -> Matrix:
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}")
    for i, r in enumerate(rows, 1):
        if len(r) != n:
            raise ParseError(f"row {i} has {len(r)} entries, expected {n}")
    return Matrix(field, [[field.parse(str(x)) for x in r] for r in rows], ncols=n)


def parse_text(text: str) -> Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) < 2:
        raise ParseError("a matrix file needs a field line and a size line")
    field = parse_field(lines[0])
    n = _parse_size(lines[1])
    return _build(field, n, [ln.split() for ln in lines[2:]])


def parse_json(text: str) -> Matrix:
    try:
        data = json.loads(text)
        field = parse_field(str(data["field"]))
        n = _parse_size(str(data["n"]))
        rows = data["rows"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON matrix: {exc}") from exc
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("rows must be a list of lists")
    if any(isinstance(x, (float, bool)) for r in rows for x in r):
        raise ParseError("entries must be integers or strings")
    return _build(field, n, rows)


def parse_matrix(text: str) -> Matrix:
    """Either format; JSON is recognised by a leading ``{``."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)


def read_matrix(path) -> Matrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_matrix(text)


def entries(M: Matrix) -> list:
    return [[M.field.format(x) for x in r] for r in M.rows]


def format_text(M: Matrix) -> str:
    lines = [str(M.field), str(M.nrows)] + [" ".join(r) for r in entries(M)]
    return "\n".join(lines) + "\n"


def to_json_dict(M: Matrix) -> dict:
    return {"field": str(M.field), "n": M.nrows, "rows": entries(M)}


def format_json(M: Matrix) -> str:
    return json.dumps(to_json_dict(M))
