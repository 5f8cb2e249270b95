"""Command-line calculator for grove arithmetic.

Subcommands: eval, enumerate, table, factor.  Expressions use ASCII
operator tokens because the usual glyphs are hard to type:

    ~g          mirror
    f * g       product
    f <+ g      left sum
    f +> g      right sum
    f <+> g     middle sum (planar mode only)
    f + g       sum
    f u g       union
    total(n)    the grove of every degree-n tree
    deg(f)      degree of the result
    card(f)     number of trees in the result

Precedence from tightest to loosest: ~, *, the three partial sums, +, u;
all binary operators associate to the left and parentheses override.
Trees are written by name ("131"), groves as brace sets ("{12, 21}"),
"0" is the leaf.  Exit codes: 0 success, 2 syntax error, 3 semantic error
(invalid name, wrong flavor, degree cap, undefined case), 1 internal
error.  The environment variable ARITHMETREE_DEGREE_CAP overrides both
degree caps.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from . import binary, planar, tables
from .notation import decode, parse_name
from .trees import (
    BINARY,
    LEFT,
    MIDDLE,
    PLANAR,
    RIGHT,
    FlavorError,
    Grove,
    InvalidNameError,
    TreeArithmeticError,
    enumerate_binary,
    enumerate_planar,
    mirror,
    set_degree_caps,
    total_grove,
)


class ExprSyntaxError(Exception):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# expression AST

@dataclass(frozen=True)
class Lit:
    names: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Total:
    degree: int


@dataclass(frozen=True)
class BinOp:
    op: str  # "union", "sum", LEFT, RIGHT, MIDDLE or "product"
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Mirror:
    operand: object


@dataclass(frozen=True)
class Query:
    kind: str  # "deg" or "card"
    operand: object


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op><\+>|<\+|\+>|[*+~(){},u])|(?P<name>\[[0-9,]+\]|[0-9]+)|(?P<word>[A-Za-z_]+))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprSyntaxError(f"unexpected character {stripped[0]!r}", pos)
        if match.group("op"):
            tokens.append(("op", match.group("op"), match.start("op")))
        elif match.group("name"):
            tokens.append(("name", match.group("name"), match.start("name")))
        else:
            word = match.group("word")
            if word in ("total", "deg", "card"):
                tokens.append(("word", word, match.start("word")))
            elif word == "u":
                tokens.append(("op", "u", match.start("word")))
            else:
                raise ExprSyntaxError(f"unknown word {word!r}", match.start("word"))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.index]
        if kind is not None and tok[0] != kind:
            raise ExprSyntaxError(f"expected {value or kind}, found {tok[1]!r}", tok[2])
        if value is not None and tok[1] != value:
            raise ExprSyntaxError(f"expected {value!r}, found {tok[1]!r}", tok[2])
        self.index += 1
        return tok

    def parse(self):
        expr = self.union()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected trailing {tok[1]!r}", tok[2])
        return expr

    def union(self):
        expr = self.sum()
        while self.peek()[:2] == ("op", "u"):
            self.take()
            expr = BinOp("union", expr, self.sum())
        return expr

    def sum(self):
        expr = self.trisum()
        while self.peek()[:2] == ("op", "+"):
            self.take()
            expr = BinOp("sum", expr, self.trisum())
        return expr

    def trisum(self):
        expr = self.product()
        kinds = {"<+": LEFT, "+>": RIGHT, "<+>": MIDDLE}
        while self.peek()[0] == "op" and self.peek()[1] in kinds:
            op = self.take()[1]
            expr = BinOp(kinds[op], expr, self.product())
        return expr

    def product(self):
        expr = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            expr = BinOp("product", expr, self.unary())
        return expr

    def unary(self):
        if self.peek()[:2] == ("op", "~"):
            self.take()
            return Mirror(self.unary())
        return self.atom()

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "op" and value == "(":
            self.take()
            expr = self.union()
            self.take("op", ")")
            return expr
        if kind == "word":
            self.take()
            self.take("op", "(")
            if value == "total":
                tok = self.take("name")
                if not tok[1].isdigit():
                    raise ExprSyntaxError("total() needs a plain integer", tok[2])
                inner: object = Total(int(tok[1]))
            else:
                inner = Query(value, self.union())
            self.take("op", ")")
            return inner
        if kind == "op" and value == "{":
            self.take()
            names = [self._name_token()]
            while self.peek()[:2] == ("op", ","):
                self.take()
                names.append(self._name_token())
            self.take("op", "}")
            return Lit(tuple(names))
        if kind == "name":
            return Lit((self._name_token(),))
        raise ExprSyntaxError(f"expected a value, found {value!r}", pos)

    def _name_token(self) -> tuple[int, ...]:
        tok = self.take("name")
        try:
            return parse_name(tok[1])
        except InvalidNameError as exc:
            raise ExprSyntaxError(str(exc), tok[2]) from None


def parse(text: str):
    """Parse expression text to an AST; raises ExprSyntaxError."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation

def _require_grove(value, what: str) -> Grove:
    if not isinstance(value, Grove):
        raise FlavorError(f"{what} needs a grove operand, not a number")
    return value


def evaluate(node, flavor: str):
    """Evaluate an AST to a Grove or an int under the given flavor."""
    mod = binary if flavor == BINARY else planar
    if isinstance(node, Lit):
        return Grove(decode(nm, flavor) for nm in node.names)
    if isinstance(node, Total):
        return total_grove(node.degree, flavor)
    if isinstance(node, Mirror):
        return mirror(_require_grove(evaluate(node.operand, flavor), "mirror"))
    if isinstance(node, Query):
        g = _require_grove(evaluate(node.operand, flavor), node.kind)
        return g.degree if node.kind == "deg" else len(g)
    if isinstance(node, BinOp):
        lhs = _require_grove(evaluate(node.lhs, flavor), "the operator")
        rhs = _require_grove(evaluate(node.rhs, flavor), "the operator")
        if node.op == "union":
            from .trees import grove_union

            return grove_union(lhs, rhs)
        if node.op == "sum":
            return mod.add(lhs, rhs)
        if node.op == "product":
            return mod.multiply(lhs, rhs)
        if node.op == MIDDLE and flavor == BINARY:
            raise FlavorError("the middle sum <+> needs --planar")
        if node.op == LEFT:
            return mod.left_sum(lhs, rhs)
        if node.op == RIGHT:
            return mod.right_sum(lhs, rhs)
        if node.op == MIDDLE:
            return mod.middle_sum(lhs, rhs)
    raise TreeArithmeticError(f"cannot evaluate {node!r}")


def eval_text(text: str, flavor: str = BINARY):
    return evaluate(parse(text), flavor)


# ---------------------------------------------------------------------------
# commands

def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _flavor(args) -> str:
    return PLANAR if args.planar else BINARY


def _cmd_eval(args) -> int:
    result = eval_text(args.expression, _flavor(args))
    if args.json:
        if isinstance(result, Grove):
            payload = {"degree": result.degree, "trees": list(result.names())}
        else:
            payload = {"value": result}
        _emit(json.dumps(payload), args.output)
    else:
        _emit(str(result), args.output)
    return 0


def _cmd_enumerate(args) -> int:
    flavor = _flavor(args)
    ts = enumerate_planar(args.degree) if flavor == PLANAR else enumerate_binary(args.degree)
    names = [str(t) for t in ts]
    if args.json:
        _emit(json.dumps({"degree": args.degree, "trees": names}), args.output)
    else:
        _emit("\n".join(names), args.output)
    return 0


def _cmd_table(args) -> int:
    flavor = _flavor(args)
    operation = tables.ADD if args.operation == "add" else tables.MULTIPLY
    if args.check:
        problems = tables.check_golden(flavor, operation)
        if problems:
            for problem in problems:
                print(problem, file=sys.stderr)
            return 1
        _emit(f"{flavor} {args.operation} table matches the recorded data", args.output)
        return 0
    lines = tables.table_lines(flavor, operation, max_degree=args.max_degree)
    if args.json:
        cells = []
        for line in lines:
            row, op, col, result = tables.parse_cell_line(line, flavor)
            cells.append({"row": row, "col": col, "result": list(result.names())})
        _emit(json.dumps({"flavor": flavor, "operation": args.operation, "cells": cells}),
              args.output)
    else:
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_factor(args) -> int:
    from .notation import parse_grove

    grove = parse_grove(args.grove, BINARY)
    found = sorted(binary.factor(grove), key=lambda pair: (pair[0].names(), pair[1].names()))
    if args.json:
        payload = [{"left": list(a.names()), "right": list(b.names())} for a, b in found]
        _emit(json.dumps({"factorizations": payload}), args.output)
    elif not found:
        _emit("prime", args.output)
    else:
        lines = [f"({', '.join(a.names())}) x ({', '.join(b.names())})" for a, b in found]
        _emit("\n".join(lines), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grovecalc",
        description="Exact arithmetic on planar binary trees, planar trees and groves.",
        epilog="Operators, tightest first: ~ (mirror), * (product), "
               "<+ / +> / <+> (left, right, middle sum), + (sum), u (union).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, planar_flag=True):
        if planar_flag:
            p.add_argument("--planar", action="store_true",
                           help="work with general planar trees")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")

    p_eval = sub.add_parser("eval", help="evaluate a grove expression")
    p_eval.add_argument("expression")
    common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_enum = sub.add_parser("enumerate", help="list every tree of one degree")
    p_enum.add_argument("degree", type=int)
    common(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_table = sub.add_parser("table", help="emit or check a reference table")
    p_table.add_argument("operation", choices=["add", "mul"])
    p_table.add_argument("--max-degree", type=int, default=None,
                         help="restrict rows and columns to this degree")
    p_table.add_argument("--check", action="store_true",
                         help="recompute the recorded table and compare")
    common(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_factor = sub.add_parser("factor", help="factor a binary grove or report it prime")
    p_factor.add_argument("grove", help="a name or a brace set of names")
    common(p_factor, planar_flag=False)
    p_factor.set_defaults(func=_cmd_factor)

    return parser


def main(argv: list[str] | None = None) -> int:
    cap = os.environ.get("ARITHMETREE_DEGREE_CAP")
    if cap is not None:
        try:
            value = int(cap)
        except ValueError:
            print(f"ARITHMETREE_DEGREE_CAP must be an integer, got {cap!r}", file=sys.stderr)
            return 3
        set_degree_caps(binary=value, planar=value)
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "planar", False) and args.command == "factor":
        print("factoring is defined for binary groves", file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except TreeArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
