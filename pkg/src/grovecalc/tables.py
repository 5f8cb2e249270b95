"""Reference tables, counting checks and the grove-factorization exercise.

The four reference tables (binary and planar, addition and multiplication)
live as text files under golden/, one cell per line in the format

    <row-name> <op> <col-name> = {name, name, ...}

with names in canonical order, groves as brace sets without spaces on the
operand side, UTF-8 and LF endings.  Cells compare as sets, never by the
ordering any particular source printed them in.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from . import binary, planar
from .notation import decode
from .trees import (
    BINARY,
    PLANAR,
    Grove,
    GroveError,
    InvalidNameError,
    check_degree_cap,
    enumerate_binary,
    total_grove,
)

ADD = "add"
MULTIPLY = "multiply"

_GOLDEN_FILES = {
    (BINARY, ADD): "binary_add.txt",
    (BINARY, MULTIPLY): "binary_mul.txt",
    (PLANAR, ADD): "planar_add.txt",
    (PLANAR, MULTIPLY): "planar_mul.txt",
}

_OP_SYMBOL = {ADD: "+", MULTIPLY: "*"}


@dataclass(frozen=True)
class ArithmeticTable:
    """A grid of grove results for one operation over fixed operand lists."""

    flavor: str
    operation: str
    rows: tuple[Grove, ...]
    cols: tuple[Grove, ...]
    cells: Mapping[tuple[Grove, Grove], Grove]

    def cell(self, row: Grove, col: Grove) -> Grove:
        return self.cells[row, col]


def _apply(flavor: str, operation: str, row: Grove, col: Grove) -> Grove:
    mod = binary if flavor == BINARY else planar
    if operation == ADD:
        return mod.add(row, col)
    if operation == MULTIPLY:
        return mod.multiply(row, col)
    raise GroveError(f"unknown table operation {operation!r}")


def build_table(flavor, operation, rows, cols) -> ArithmeticTable:
    """Compute every row-by-column cell for the given operand groves."""
    rows = tuple(_operand(r, flavor) for r in rows)
    cols = tuple(_operand(c, flavor) for c in cols)
    for g in (*rows, *cols):
        check_degree_cap(g.degree, flavor)
    cells = {(r, c): _apply(flavor, operation, r, c) for r in rows for c in cols}
    return ArithmeticTable(flavor, operation, rows, cols, cells)


def _operand(value, flavor: str) -> Grove:
    if isinstance(value, Grove):
        return value
    if isinstance(value, str):
        return _parse_operand(value, flavor)
    try:
        return Grove([decode(tuple(value), flavor)])
    except (TypeError, InvalidNameError):
        pass
    return Grove([value])


def _parse_operand(text: str, flavor: str) -> Grove:
    s = text.strip()
    if s.startswith("{"):
        if not s.endswith("}"):
            raise InvalidNameError(f"unterminated grove operand {text!r}")
        return Grove(decode(part, flavor) for part in s[1:-1].split(","))
    return Grove([decode(s, flavor)])


# ---------------------------------------------------------------------------
# the reference layouts

def reference_layout(flavor: str, operation: str) -> tuple[tuple[str, str], ...]:
    """(row, col) operand texts of the checked-in reference table, in order."""
    if flavor == BINARY and operation == ADD:
        rows = ["1", "12", "21", "123", "213", "131", "312", "321"]
        cols = ["1", "12", "21"]
        return tuple((r, c) for r in rows for c in cols)
    if flavor == BINARY and operation == MULTIPLY:
        head = [
            (r, c)
            for r in ["12", "21"]
            for c in ["12", "21", "{12,21}", "123", "213", "131", "312", "321"]
        ]
        tail = [
            (r, c)
            for r in ["123", "213", "131"]
            for c in ["12", "21", "{12,21}"]
        ]
        return tuple(head + tail)
    if flavor == PLANAR and operation == ADD:
        ops = ["1", "12", "21", "22"]
        return tuple((r, c) for r in ops for c in ops)
    if flavor == PLANAR and operation == MULTIPLY:
        rows = ["12", "21", "22"]
        cols = ["12", "21", "22", "{12,21}", "123", "133"]
        return tuple((r, c) for r in rows for c in cols)
    raise GroveError(f"no reference table for {flavor}/{operation}")


def format_cell(flavor: str, operation: str, row_text: str, col_text: str) -> str:
    row = _parse_operand(row_text, flavor)
    col = _parse_operand(col_text, flavor)
    result = _apply(flavor, operation, row, col)
    return f"{row_text} {_OP_SYMBOL[operation]} {col_text} = {result}"


def table_lines(flavor: str, operation: str, max_degree: int | None = None) -> list[str]:
    """Computed reference-table lines, optionally sliced by operand degree."""
    if max_degree is not None:
        check_degree_cap(max_degree, flavor)
    lines = []
    for row_text, col_text in reference_layout(flavor, operation):
        if max_degree is not None:
            row = _parse_operand(row_text, flavor)
            col = _parse_operand(col_text, flavor)
            if row.degree > max_degree or col.degree > max_degree:
                continue
        lines.append(format_cell(flavor, operation, row_text, col_text))
    return lines


def golden_lines(flavor: str, operation: str) -> list[str]:
    """Checked-in reference lines, comments and blanks stripped."""
    name = _GOLDEN_FILES[flavor, operation]
    text = resources.files("grovecalc.golden").joinpath(name).read_text("utf-8")
    return [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def parse_cell_line(line: str, flavor: str):
    lhs, _, rhs = line.partition(" = ")
    parts = lhs.split()
    if len(parts) != 3 or not rhs.startswith("{") or not rhs.endswith("}"):
        raise GroveError(f"malformed table line: {line!r}")
    row_text, op_sym, col_text = parts
    operation = ADD if op_sym == "+" else MULTIPLY
    result = Grove(decode(part, flavor) for part in rhs[1:-1].split(","))
    return row_text, operation, col_text, result


def check_golden(flavor: str, operation: str) -> list[str]:
    """Recompute every checked-in cell; returns mismatch descriptions."""
    problems = []
    seen = []
    for line in golden_lines(flavor, operation):
        row_text, op, col_text, want = parse_cell_line(line, flavor)
        if op != operation:
            problems.append(f"unexpected operation in line: {line}")
            continue
        seen.append((row_text, col_text))
        got = _apply(flavor, operation, _parse_operand(row_text, flavor),
                     _parse_operand(col_text, flavor))
        if got != want:
            problems.append(
                f"{row_text} {_OP_SYMBOL[operation]} {col_text}: computed {got}, recorded {want}"
            )
    layout = list(reference_layout(flavor, operation))
    if seen != layout:
        problems.append("recorded cells do not match the reference layout")
    return problems


# ---------------------------------------------------------------------------
# counting checks

def pair_counts(n: int, m: int) -> dict[tuple, int]:
    """Sizes of the sums x+y over all binary tree pairs of degrees (n, m).

    The sizes total the number of trees of degree n+m: the pairwise sums
    partition the total grove.
    """
    check_degree_cap(n + m, BINARY)
    return {
        (x, y): len(binary.add(x, y))
        for x in enumerate_binary(n)
        for y in enumerate_binary(m)
    }


def times_total_counts(n: int, m: int) -> dict:
    """Sizes of the products x times the degree-m total grove, over x of degree n.

    The sizes total the number of trees of degree n*m.
    """
    check_degree_cap(n * m, BINARY)
    h = total_grove(m)
    return {x: len(binary.multiply(x, h)) for x in enumerate_binary(n)}


def check_total_identity(n: int, m: int, operation: str = ADD, flavor: str = BINARY) -> bool:
    """True when the total groves satisfy the degree identity exactly."""
    result_degree = n + m if operation == ADD else n * m
    check_degree_cap(result_degree, flavor)
    lhs = _apply(flavor, operation, total_grove(n, flavor), total_grove(m, flavor))
    return lhs == total_grove(result_degree, flavor)


def solve_grove_factorization(g) -> frozenset[tuple[Grove, Grove]]:
    """All ordered two-grove factorizations of a binary grove (degrees >= 2)."""
    return binary.factor(g)


# The degree-9 exercise grove and its factorization.  The answer was
# computed once by the exhaustive search over ordered pairs of degree-3
# groves and frozen here; tests re-run that search.
EXERCISE_GROVE_NAMES = (
    "131491241", "131492141", "131494131",
    "141291241", "141292141", "141294131",
    "142191241", "142192141", "142194131",
)

EXERCISE_FACTOR_NAMES = (("131",), ("131",))


def exercise_grove() -> Grove:
    return Grove(decode(nm, BINARY) for nm in EXERCISE_GROVE_NAMES)


def exercise_factors() -> frozenset[tuple[Grove, Grove]]:
    a = Grove(decode(nm, BINARY) for nm in EXERCISE_FACTOR_NAMES[0])
    b = Grove(decode(nm, BINARY) for nm in EXERCISE_FACTOR_NAMES[1])
    return frozenset({(a, b)})
