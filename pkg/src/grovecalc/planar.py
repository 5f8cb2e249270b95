"""Arithmetic on general planar trees and their groves.

The sum now splits into three partial sums: left, right and a middle one
that merges the last subtree of the first operand with the first subtree
of the second.  Multiplication again substitutes into universal
expressions, which here use all three connectives.  Restricting to trees
whose vertices all carry two subtrees recovers the binary theory, via the
embedding and projection at the bottom of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binary import UNIT, UExpr
from .trees import (
    LEFT,
    MIDDLE,
    PLANAR,
    RIGHT,
    FlavorError,
    Grove,
    GroveError,
    PBTree,
    PTree,
    UndefinedCaseError,
    as_grove,
    check_degree_cap,
    vertex_count,
)

LEAF = PTree.LEAF


# ---------------------------------------------------------------------------
# the three partial sums

@lru_cache(maxsize=None)
def _add_trees(x: PTree, y: PTree) -> frozenset[PTree]:
    if x.is_leaf:
        return frozenset((y,))
    if y.is_leaf:
        return frozenset((x,))
    return _left_trees(x, y) | _right_trees(x, y) | _middle_trees(x, y)


def _left_trees(x: PTree, y: PTree) -> frozenset[PTree]:
    if x.is_leaf:
        if y.is_leaf:
            raise UndefinedCaseError("0 <+ 0 is not defined")
        return frozenset((LEAF,))
    head = x.children[:-1]
    return frozenset(PTree((*head, t)) for t in _add_trees(x.children[-1], y))


def _right_trees(x: PTree, y: PTree) -> frozenset[PTree]:
    if y.is_leaf:
        if x.is_leaf:
            raise UndefinedCaseError("0 +> 0 is not defined")
        return frozenset((LEAF,))
    tail = y.children[1:]
    return frozenset(PTree((t, *tail)) for t in _add_trees(x, y.children[0]))


def _middle_trees(x: PTree, y: PTree) -> frozenset[PTree]:
    if x.is_leaf or y.is_leaf:
        if x.is_leaf and y.is_leaf:
            raise UndefinedCaseError("0 <+> 0 is not defined")
        return frozenset((LEAF,))
    head = x.children[:-1]
    tail = y.children[1:]
    merged = _add_trees(x.children[-1], y.children[0])
    return frozenset(PTree((*head, t, *tail)) for t in merged)


_TRI_TREES = {LEFT: _left_trees, RIGHT: _right_trees, MIDDLE: _middle_trees}


def tri_sum(kind: str, g, h) -> Grove:
    """One of the three partial sums, extended to groves by distributivity."""
    if kind not in _TRI_TREES:
        raise FlavorError(f"unknown partial sum {kind!r}")
    op = _TRI_TREES[kind]
    g = as_grove(g, PLANAR)
    h = as_grove(h, PLANAR)
    out: set[PTree] = set()
    for x in g:
        for y in h:
            out |= op(x, y)
    return Grove(out)


def left_sum(g, h) -> Grove:
    return tri_sum(LEFT, g, h)


def right_sum(g, h) -> Grove:
    return tri_sum(RIGHT, g, h)


def middle_sum(g, h) -> Grove:
    return tri_sum(MIDDLE, g, h)


def add(g, h) -> Grove:
    """Sum of planar groves: the union of the three partial sums."""
    g = as_grove(g, PLANAR)
    h = as_grove(h, PLANAR)
    out: set[PTree] = set()
    for x in g:
        for y in h:
            out |= _add_trees(x, y)
    return Grove(out)


# ---------------------------------------------------------------------------
# universal expressions and multiplication

def universal_expression(x: PTree) -> UExpr:
    """Canonical three-connective expression of a non-leaf planar tree.

    A tree with subtrees (c0, ..., ck) becomes the middle-joined chain of
    the segments (expr(ci) +> 1) for i < k, followed by <+ expr(ck); the
    pieces for leaf subtrees are dropped.  The chain must be grouped as
    written: the segments are built first, then joined.
    """
    if x.is_leaf:
        raise UndefinedCaseError("the leaf has no universal expression")
    segments = []
    for child in x.children[:-1]:
        if child.is_leaf:
            segments.append(UNIT)
        else:
            segments.append(UExpr(RIGHT, universal_expression(child), UNIT))
    expr = segments[0]
    for seg in segments[1:]:
        expr = UExpr(MIDDLE, expr, seg)
    last = x.children[-1]
    if last.is_leaf:
        return expr
    return UExpr(LEFT, expr, universal_expression(last))


def eval_uexpr(expr: UExpr, y) -> Grove:
    """Evaluate an expression with every unit replaced by the planar grove y."""
    y = as_grove(y, PLANAR)
    if expr.is_unit:
        return y
    return tri_sum(expr.op, eval_uexpr(expr.lhs, y), eval_uexpr(expr.rhs, y))


_ZERO_GROVE_P = Grove([LEAF])


@lru_cache(maxsize=None)
def _mul_tree(x: PTree, h: Grove) -> Grove:
    if x.is_leaf:
        return _ZERO_GROVE_P
    segments = []
    for child in x.children[:-1]:
        if child.is_leaf:
            segments.append(h)
        else:
            segments.append(right_sum(_mul_tree(child, h), h))
    acc = segments[0]
    for seg in segments[1:]:
        acc = middle_sum(acc, seg)
    last = x.children[-1]
    if last.is_leaf:
        return acc
    return left_sum(acc, _mul_tree(last, h))


def multiply(g, h) -> Grove:
    """Product of planar groves, by substitution into universal expressions."""
    g = as_grove(g, PLANAR)
    h = as_grove(h, PLANAR)
    if g.degree == 0 or h.degree == 0:
        return _ZERO_GROVE_P
    check_degree_cap(g.degree * h.degree, PLANAR)
    out: set[PTree] = set()
    for x in g:
        out.update(_mul_tree(x, h).trees)
    return Grove(out)


# ---------------------------------------------------------------------------
# the binary theory as a quotient

def embed_binary(x: PBTree) -> PTree:
    """Read a binary tree as the planar tree with the same shape."""
    if x.is_leaf:
        return LEAF
    return PTree((embed_binary(x.left), embed_binary(x.right)))


def _strictly_binary(x: PTree) -> PBTree | None:
    if x.is_leaf:
        return PBTree.LEAF
    if len(x.children) != 2:
        return None
    left = _strictly_binary(x.children[0])
    if left is None:
        return None
    right = _strictly_binary(x.children[1])
    if right is None:
        return None
    return PBTree(left, right)


def project_binary(g) -> Grove | None:
    """Keep the members whose vertices all carry two subtrees; None if none do."""
    g = as_grove(g, PLANAR)
    kept = [b for b in (_strictly_binary(t) for t in g) if b is not None]
    return Grove(kept) if kept else None


# ---------------------------------------------------------------------------
# the vertex-count grading

@dataclass(frozen=True)
class GradedIndex:
    """Position of a tree in the grading: degree n, cell i with 1 <= i <= n.

    A degree-n tree sits in cell i exactly when it has n+1-i internal
    vertices; cell 1 holds the binary trees, cell n the single corolla.
    """

    degree: int
    cell: int


def vertex_grade(x: PTree) -> GradedIndex:
    """Cell of a positive-degree planar tree in the vertex-count grading."""
    if x.is_leaf:
        raise GroveError("the leaf sits in every cell and is not graded")
    n = x.degree
    return GradedIndex(n, n + 1 - vertex_count(x))


def _in_cell(t: PTree, cell: int) -> bool:
    # the leaf belongs to every cell
    return t.is_leaf or vertex_grade(t).cell == cell


def graded_sum(cell: int, g, h) -> Grove | None:
    """Sum restricted to one cell of the grading.

    Both inputs must lie entirely in the given cell.  The cell part of the
    sum can be empty (already for corollas), in which case None is
    returned; for cell 1 this operation mirrors the binary sum.
    """
    if cell < 1:
        raise GroveError("cells are numbered from 1")
    g = as_grove(g, PLANAR)
    h = as_grove(h, PLANAR)
    for operand in (g, h):
        for t in operand:
            if not _in_cell(t, cell):
                raise GroveError(f"{t} does not lie in cell {cell}")
    kept = [t for t in add(g, h) if _in_cell(t, cell)]
    return Grove(kept) if kept else None
