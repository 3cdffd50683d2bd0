"""Contingency-table representation, validation, and parsing.

Counts are kept as exact Python integers; probabilities are doubles. Row
and column totals are always recomputed from the stored cells so there is a
single source of truth. All types are immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Sequence

from .errors import (
    EmptyTableError,
    NegativeCellError,
    ParseError,
    ZeroTotalError,
)

_PROB_SUM_TOL = 1e-12
_CELL_RE = re.compile(r"^[+-]?\d+$")


@dataclass(frozen=True)
class ContingencyTable:
    """I x J table of nonnegative integer counts with total ``n``.

    Construct through :func:`new_table`, which validates shape and entries.
    """

    counts: tuple[tuple[int, ...], ...]
    n: int

    @property
    def n_rows(self) -> int:
        return len(self.counts)

    @property
    def n_cols(self) -> int:
        return len(self.counts[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    def row_totals(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.counts)

    def col_totals(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self.counts) for j in range(self.n_cols))


@dataclass(frozen=True)
class ProbTable:
    """I x J table of cell probabilities summing to 1 (within 1e-12)."""

    probs: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        total = math.fsum(p for row in self.probs for p in row)
        if abs(total - 1.0) > _PROB_SUM_TOL:
            raise ValueError(f"cell probabilities sum to {total!r}, expected 1")

    @property
    def n_rows(self) -> int:
        return len(self.probs)

    @property
    def n_cols(self) -> int:
        return len(self.probs[0])

    def row_totals(self) -> tuple[float, ...]:
        return tuple(math.fsum(row) for row in self.probs)

    def col_totals(self) -> tuple[float, ...]:
        return tuple(math.fsum(row[j] for row in self.probs) for j in range(self.n_cols))


def new_table(counts: Iterable[Iterable[int]]) -> ContingencyTable:
    """Validate a rectangular matrix of nonnegative integers and build a table.

    Raises:
        EmptyTableError: zero rows or zero columns.
        NegativeCellError: any cell below zero.
        ZeroTotalError: all cells zero.
        ValueError: ragged rows or non-integer entries.
    """
    rows: list[tuple[int, ...]] = []
    for i, raw_row in enumerate(counts):
        row = []
        for j, value in enumerate(raw_row):
            if not isinstance(value, Integral):
                raise ValueError(f"cell [{i}][{j}] is not an integer: {value!r}")
            value = int(value)
            if value < 0:
                raise NegativeCellError(f"cell [{i}][{j}] is negative: {value}")
            row.append(value)
        rows.append(tuple(row))
    if not rows or not rows[0]:
        raise EmptyTableError("table must have at least one row and one column")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValueError(f"row {i} has {len(row)} cells, expected {width}")
    total = sum(sum(row) for row in rows)
    if total == 0:
        raise ZeroTotalError("all cells are zero")
    return ContingencyTable(counts=tuple(rows), n=total)


def mle_probs(table: ContingencyTable) -> ProbTable:
    """Cell relative frequencies: each count divided by the grand total."""
    n = table.n
    return ProbTable(tuple(tuple(c / n for c in row) for row in table.counts))


def drop_empty_margins(table: ContingencyTable) -> ContingencyTable:
    """Remove all-zero rows and columns, leaving the remaining cells unchanged.

    Idempotent; the result has strictly positive row and column totals, as
    required by the zero-count elision identity for mutual information.
    """
    keep_rows = [i for i, t in enumerate(table.row_totals()) if t > 0]
    keep_cols = [j for j, t in enumerate(table.col_totals()) if t > 0]
    if len(keep_rows) == table.n_rows and len(keep_cols) == table.n_cols:
        return table
    trimmed = [[table.counts[i][j] for j in keep_cols] for i in keep_rows]
    return new_table(trimmed)


def parse_delimited(text: str) -> ContingencyTable:
    """Parse one table row per line, cells separated by commas or tabs.

    Blank lines are skipped. Rows must all have the same width; cells must
    be nonnegative integers. Errors carry the 1-based line and column of
    the offending cell.
    """
    rows: list[list[int]] = []
    width: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        sep = "," if "," in line else "\t"
        tokens = line.split(sep)
        row: list[int] = []
        for colno, token in enumerate(tokens, start=1):
            token = token.strip()
            if not _CELL_RE.match(token):
                raise ParseError(f"cell {token!r} is not an integer", lineno, colno)
            value = int(token)
            if value < 0:
                raise ParseError(f"negative cell value {value}", lineno, colno)
            row.append(value)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(
                f"ragged row: {len(row)} cells, expected {width}", lineno
            )
        rows.append(row)
    if not rows:
        raise ParseError("input contains no table rows")
    return new_table(rows)


def parse_structured(text: str) -> ContingencyTable:
    """Parse a JSON document holding the counts as a nested array.

    The document must be an object with a ``counts`` key mapping to a
    rectangular array of nonnegative integers.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict) or "counts" not in doc:
        raise ParseError("structured input must be an object with a 'counts' key")
    counts = doc["counts"]
    if not isinstance(counts, list) or not all(isinstance(r, list) for r in counts):
        raise ParseError("'counts' must be an array of arrays")
    for i, row in enumerate(counts):
        for j, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParseError(f"cell [{i}][{j}] is not an integer: {value!r}")
            if value < 0:
                raise ParseError(f"negative cell value {value} at [{i}][{j}]")
    try:
        return new_table(counts)
    except (EmptyTableError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def parse_table(text: str, fmt: str = "auto") -> ContingencyTable:
    """Parse delimited text or a structured JSON document into a table.

    ``fmt`` is ``"auto"`` (sniff by leading ``{``), ``"delimited"``, or
    ``"structured"``.
    """
    if fmt == "auto":
        fmt = "structured" if text.lstrip().startswith("{") else "delimited"
    if fmt == "structured":
        return parse_structured(text)
    if fmt == "delimited":
        return parse_delimited(text)
    raise ValueError(f"unknown table format {fmt!r}")


def parse_real_matrix(text: str) -> list[list[float]]:
    """Parse a delimited matrix of real numbers (used for shrinkage targets)."""
    rows: list[list[float]] = []
    width: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        sep = "," if "," in line else "\t"
        row: list[float] = []
        for colno, token in enumerate(line.split(sep), start=1):
            try:
                row.append(float(token.strip()))
            except ValueError:
                raise ParseError(f"cell {token!r} is not a number", lineno, colno) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"ragged row: {len(row)} cells, expected {width}", lineno)
        rows.append(row)
    if not rows:
        raise ParseError("input contains no matrix rows")
    return rows
