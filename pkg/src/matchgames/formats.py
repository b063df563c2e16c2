"""File formats and report rendering for the command-line workflows.

Input files are JSON.  Numbers may be integers, decimal literals, or "p/q"
strings; all three parse to exact rationals (decimals are read as printed, so
0.1 means 1/10).  Machine-readable reports are canonical JSON in which every
rational is an integer or a "p/q" string, never a decimal, and field order is
fixed, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from .bargaining import BimatrixGame
from .core import (
    GameInstance,
    MatchGamesError,
    UtilityMatrix,
    as_rational,
    format_rational,
)


class ParseError(MatchGamesError):
    """The input is not well-formed JSON."""


class SchemaError(MatchGamesError):
    """The input parses but violates the file schema."""


@dataclass(frozen=True)
class MarketFile:
    """A bilateral market file: labels plus the two utility grids.

    A is worker-row by enterprise-column; B is enterprise-row by
    worker-column, exactly as stored on disk.
    """

    workers: tuple[str, ...]
    enterprises: tuple[str, ...]
    worker_utilities: UtilityMatrix
    enterprise_utilities: UtilityMatrix

    @property
    def n(self) -> int:
        return self.worker_utilities.n

    def to_instance(self) -> GameInstance:
        return GameInstance(
            worker_utilities=self.worker_utilities,
            enterprise_utilities=self.enterprise_utilities,
        )


@dataclass(frozen=True)
class BimatrixFile:
    """A two-player game file: outcome labels plus the payoff-pair grid."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    game: BimatrixGame


def _load_json(data: str | bytes) -> Any:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from exc
    try:
        # parse_float receives the literal text, so decimals stay exact.
        return json.loads(data, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"input is not valid JSON: {exc}") from exc


def _require(obj: dict, key: str, kind: type, where: str) -> Any:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    if key not in obj:
        raise SchemaError(f"{where}: missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{where}: key {key!r} must be a {kind.__name__}")
    return value


def _string_list(values: Any, where: str) -> tuple[str, ...]:
    if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
        raise SchemaError(f"{where}: expected an array of strings")
    return tuple(values)


def _rational_cell(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str, Fraction)):
        raise SchemaError(f"{where}: expected a number or \"p/q\" string, got {value!r}")
    try:
        return as_rational(value)
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def _rational_grid(values: Any, n: int, where: str) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(values, list) or len(values) != n:
        raise SchemaError(f"{where}: expected {n} rows")
    rows = []
    for i, row in enumerate(values):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"{where}: row {i} must have {n} entries")
        rows.append(tuple(_rational_cell(v, f"{where}[{i}]") for v in row))
    return tuple(rows)


def parse_market(data: str | bytes) -> MarketFile:
    """Parse and validate a market file; ParseError / SchemaError on bad input."""
    doc = _load_json(data)
    workers = _string_list(_require(doc, "workers", list, "market"), "market.workers")
    enterprises = _string_list(_require(doc, "enterprises", list, "market"), "market.enterprises")
    n = len(workers)
    if n == 0:
        raise SchemaError("market: empty worker list")
    if len(enterprises) != n:
        raise SchemaError(f"market: {n} workers but {len(enterprises)} enterprises")
    a = _rational_grid(_require(doc, "A", list, "market"), n, "market.A")
    b = _rational_grid(_require(doc, "B", list, "market"), n, "market.B")
    return MarketFile(
        workers=workers,
        enterprises=enterprises,
        worker_utilities=UtilityMatrix(entries=a, row_labels=workers, col_labels=enterprises),
        enterprise_utilities=UtilityMatrix(entries=b, row_labels=enterprises, col_labels=workers),
    )


def parse_bimatrix(data: str | bytes) -> BimatrixFile:
    """Parse and validate a bimatrix-game file."""
    doc = _load_json(data)
    row_labels = _string_list(_require(doc, "row_labels", list, "bimatrix"), "bimatrix.row_labels")
    col_labels = _string_list(_require(doc, "col_labels", list, "bimatrix"), "bimatrix.col_labels")
    payoffs = _require(doc, "payoffs", list, "bimatrix")
    if len(row_labels) == 0 or len(col_labels) == 0:
        raise SchemaError("bimatrix: empty label list")
    if len(payoffs) != len(row_labels):
        raise SchemaError(f"bimatrix: expected {len(row_labels)} payoff rows")
    grid = []
    for r, row in enumerate(payoffs):
        if not isinstance(row, list) or len(row) != len(col_labels):
            raise SchemaError(f"bimatrix: payoff row {r} must have {len(col_labels)} cells")
        cells = []
        for c, cell in enumerate(row):
            if not isinstance(cell, list) or len(cell) != 2:
                raise SchemaError(f"bimatrix: cell ({r},{c}) must be a [k1, k2] pair")
            cells.append(
                (
                    _rational_cell(cell[0], f"bimatrix.payoffs[{r}][{c}][0]"),
                    _rational_cell(cell[1], f"bimatrix.payoffs[{r}][{c}][1]"),
                )
            )
        grid.append(tuple(cells))
    return BimatrixFile(row_labels=row_labels, col_labels=col_labels, game=BimatrixGame(payoffs=tuple(grid)))


def render_market(market: MarketFile) -> str:
    """Serialize a market file back to canonical JSON (round-trips exactly)."""
    doc = {
        "workers": list(market.workers),
        "enterprises": list(market.enterprises),
        "A": encode_values(market.worker_utilities.entries),
        "B": encode_values(market.enterprise_utilities.entries),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_bimatrix(bimatrix: BimatrixFile) -> str:
    doc = {
        "row_labels": list(bimatrix.row_labels),
        "col_labels": list(bimatrix.col_labels),
        "payoffs": encode_values(bimatrix.game.payoffs),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


class RenderMode(Enum):
    TEXT = "text"
    MACHINE = "machine"


@dataclass(frozen=True)
class Report:
    """A structured result document produced by one command."""

    command: str
    payload: dict
    notes: tuple[str, ...] = field(default_factory=tuple)


_RATIONAL_RE = re.compile(r"^-?\d+/[1-9]\d*$")


def encode_values(value: Any) -> Any:
    """Recursively convert rationals to ints / "p/q" strings for JSON output."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else format_rational(value)
    if isinstance(value, dict):
        return {k: encode_values(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_values(v) for v in value]
    return value


def decode_values(value: Any) -> Any:
    """Inverse of encode_values: "p/q" strings become Fractions, ints stay ints.

    Plain ints compare equal to the Fractions they encode, so decoded payloads
    compare equal to the originals.  Free-form strings are left alone unless
    they match the exact "p/q" form, so labels should not look like fractions.
    """
    if isinstance(value, str) and _RATIONAL_RE.match(value):
        return Fraction(value)
    if isinstance(value, dict):
        return {k: decode_values(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode_values(v) for v in value]
    return value


def render_report(report: Report, mode: RenderMode = RenderMode.MACHINE) -> str:
    """Render a report; machine mode is canonical JSON and round-trips."""
    if mode is RenderMode.MACHINE:
        doc = {
            "command": report.command,
            "payload": encode_values(report.payload),
            "notes": list(report.notes),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return _render_text(report)


def parse_report(data: str | bytes) -> Report:
    """Parse a machine-readable report back into a Report."""
    doc = _load_json(data)
    command = _require(doc, "command", str, "report")
    payload = _require(doc, "payload", dict, "report")
    notes = _string_list(_require(doc, "notes", list, "report"), "report.notes")
    return Report(command=command, payload=decode_values(payload), notes=notes)


def _format_scalar(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _is_grid(value: Any) -> bool:
    return (
        isinstance(value, (list, tuple))
        and len(value) > 0
        and all(isinstance(row, (list, tuple)) for row in value)
    )


def _format_inline(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_format_inline(v) for v in value) + ")"
    return _format_scalar(value)


def _render_block(lines: list[str], key: str, value: Any, indent: str) -> None:
    if isinstance(value, dict):
        lines.append(f"{indent}{key}:")
        for sub_key, sub_value in value.items():
            _render_block(lines, sub_key, sub_value, indent + "  ")
    elif isinstance(value, (list, tuple)) and value and all(isinstance(v, dict) for v in value):
        lines.append(f"{indent}{key}:")
        for item in value:
            if all(not isinstance(v, dict) and not _is_grid(v) for v in item.values()):
                parts = [
                    f"{k}: {_format_inline(v) if isinstance(v, (list, tuple)) else _format_scalar(v)}"
                    for k, v in item.items()
                ]
                lines.append(indent + "  - " + "; ".join(parts))
            else:
                lines.append(indent + "  -")
                for k, v in item.items():
                    _render_block(lines, k, v, indent + "    ")
    elif _is_grid(value) and all(
        not isinstance(cell, (list, tuple, dict)) for row in value for cell in row
    ):
        lines.append(f"{indent}{key}:")
        cells = [[_format_scalar(cell) for cell in row] for row in value]
        width = max(len(c) for row in cells for c in row)
        for row in cells:
            lines.append(indent + "  " + "  ".join(c.rjust(width) for c in row))
    elif isinstance(value, (list, tuple)):
        lines.append(f"{indent}{key}: " + ", ".join(_format_inline(v) for v in value))
    else:
        lines.append(f"{indent}{key}: {_format_scalar(value)}")


def _render_text(report: Report) -> str:
    lines = [f"== {report.command} =="]
    for key, value in report.payload.items():
        _render_block(lines, key, value, "")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
