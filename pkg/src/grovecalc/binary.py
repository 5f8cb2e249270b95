"""Arithmetic on planar binary trees and their groves.

The sum of two trees is a grove; it splits into a left and a right part,
and those two partial sums generate everything else.  Addition extends to
groves by distributing over union.  The product substitutes a grove for
every unit in a tree's universal expression; it is associative, has the
degree-1 tree as two-sided unit, and distributes over sums on the left
only.  All operations are pure and return new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .trees import (
    BINARY,
    LEFT,
    MIDDLE,
    RIGHT,
    DegreeCapError,
    FlavorError,
    Grove,
    GroveError,
    PBTree,
    UndefinedCaseError,
    as_grove,
    check_degree_cap,
    enumerate_binary,
)

LEAF = PBTree.LEAF

_OP_TOKENS = {LEFT: "<+", RIGHT: "+>", MIDDLE: "<+>"}


# ---------------------------------------------------------------------------
# universal expressions

@dataclass(frozen=True)
class UExpr:
    """A composition of copies of the degree-1 tree under the partial sums.

    The unit leaf has op None; otherwise op is LEFT, RIGHT or MIDDLE and
    both operands are present.  The number of unit leaves equals the degree
    of the tree the expression encodes.
    """

    op: str | None = None
    lhs: "UExpr | None" = None
    rhs: "UExpr | None" = None

    @property
    def is_unit(self) -> bool:
        return self.op is None

    def unit_count(self) -> int:
        if self.is_unit:
            return 1
        return self.lhs.unit_count() + self.rhs.unit_count()

    def connectives(self) -> tuple[str, ...]:
        """Connective kinds read left to right (infix order)."""
        if self.is_unit:
            return ()
        return (*self.lhs.connectives(), self.op, *self.rhs.connectives())

    def __str__(self):
        if self.is_unit:
            return "1"
        lhs = str(self.lhs) if self.lhs.is_unit else f"({self.lhs})"
        rhs = str(self.rhs) if self.rhs.is_unit else f"({self.rhs})"
        return f"{lhs} {_OP_TOKENS[self.op]} {rhs}"


UNIT = UExpr()


def universal_expression(x: PBTree) -> UExpr:
    """Canonical expression of a non-leaf tree from copies of the unit.

    A tree grafted from (l, r) becomes (expr(l) +> 1) <+ expr(r), with the
    pieces for leaf subtrees dropped.  Evaluating the result with every
    unit set to the degree-1 tree returns exactly {x}.
    """
    if x.is_leaf:
        raise UndefinedCaseError("the leaf has no universal expression")
    core = UNIT if x.left.is_leaf else UExpr(RIGHT, universal_expression(x.left), UNIT)
    if x.right.is_leaf:
        return core
    return UExpr(LEFT, core, universal_expression(x.right))


def eval_uexpr(expr: UExpr, y) -> Grove:
    """Evaluate an expression with every unit replaced by the grove y."""
    y = as_grove(y, BINARY)
    if expr.is_unit:
        return y
    if expr.op == MIDDLE:
        raise FlavorError("the middle sum does not exist for binary trees")
    a = eval_uexpr(expr.lhs, y)
    b = eval_uexpr(expr.rhs, y)
    return left_sum(a, b) if expr.op == LEFT else right_sum(a, b)


# ---------------------------------------------------------------------------
# over, under and the rotation order

def over(x: PBTree, y: PBTree) -> PBTree:
    """Identify the root of x with the leftmost leaf of y."""
    if y.is_leaf:
        return x
    return PBTree(over(x, y.left), y.right)


def under(x: PBTree, y: PBTree) -> PBTree:
    """Identify the rightmost leaf of x with the root of y."""
    if x.is_leaf:
        return y
    return PBTree(x.left, under(x.right, y))


def rotations(x: PBTree) -> list[PBTree]:
    """Trees one left-to-right edge move above x (the covering moves)."""
    out = []
    if x.is_leaf:
        return out
    l, r = x.left, x.right
    if not l.is_leaf:
        out.append(PBTree(l.left, PBTree(l.right, r)))
    out.extend(PBTree(l2, r) for l2 in rotations(l))
    out.extend(PBTree(l, r2) for r2 in rotations(r))
    return out


def _right_arm_profile(x: PBTree) -> tuple[int, ...]:
    # degree of the right subtree at each internal vertex, infix order
    out: list[int] = []

    def walk(t: PBTree) -> None:
        if t.is_leaf:
            return
        walk(t.left)
        out.append(t.right.degree)
        walk(t.right)

    walk(x)
    return tuple(out)


def tamari_leq(x: PBTree, y: PBTree) -> bool:
    """Decide the rotation order on equal-degree trees.

    Componentwise comparison of the right-subtree profiles; validated
    against the brute-force closure of single rotations in the test suite.
    """
    if x.degree != y.degree:
        raise GroveError("the rotation order only compares equal degrees")
    return all(a <= b for a, b in zip(_right_arm_profile(x), _right_arm_profile(y)))


def interval(lo: PBTree, hi: PBTree) -> Grove:
    """All trees between lo and hi in the rotation order, as a grove."""
    if lo.degree != hi.degree:
        raise GroveError("interval endpoints must share one degree")
    if not tamari_leq(lo, hi):
        raise GroveError(f"{lo} and {hi} are not an ordered pair")
    seen = {lo}
    frontier = [lo]
    while frontier:
        fresh = []
        for t in frontier:
            for u in rotations(t):
                if u not in seen and tamari_leq(u, hi):
                    seen.add(u)
                    fresh.append(u)
        frontier = fresh
    return Grove(seen)


# ---------------------------------------------------------------------------
# addition

@lru_cache(maxsize=None)
def _add_trees(x: PBTree, y: PBTree) -> frozenset[PBTree]:
    if x.is_leaf:
        return frozenset((y,))
    if y.is_leaf:
        return frozenset((x,))
    out = set()
    for t in _add_trees(x.right, y):
        out.add(PBTree(x.left, t))
    for t in _add_trees(x, y.left):
        out.add(PBTree(t, y.right))
    return frozenset(out)


def add(g, h) -> Grove:
    """Sum of two groves; bilinear over union, with the leaf neutral."""
    g = as_grove(g, BINARY)
    h = as_grove(h, BINARY)
    out: set[PBTree] = set()
    for x in g:
        for y in h:
            out |= _add_trees(x, y)
    return Grove(out)


def sum_via_interval(x: PBTree, y: PBTree) -> Grove:
    """The same sum computed as the interval from x over y to x under y."""
    return interval(over(x, y), under(x, y))


def _left_trees(x: PBTree, y: PBTree) -> frozenset[PBTree]:
    if x.is_leaf:
        if y.is_leaf:
            raise UndefinedCaseError("0 <+ 0 is not defined")
        return frozenset((LEAF,))
    return frozenset(PBTree(x.left, t) for t in _add_trees(x.right, y))


def _right_trees(x: PBTree, y: PBTree) -> frozenset[PBTree]:
    if y.is_leaf:
        if x.is_leaf:
            raise UndefinedCaseError("0 +> 0 is not defined")
        return frozenset((LEAF,))
    return frozenset(PBTree(t, y.right) for t in _add_trees(x, y.left))


def left_sum(g, h) -> Grove:
    """Left part of the sum: graft the left subtree back over rest-plus-h."""
    g = as_grove(g, BINARY)
    h = as_grove(h, BINARY)
    out: set[PBTree] = set()
    for x in g:
        for y in h:
            out |= _left_trees(x, y)
    return Grove(out)


def right_sum(g, h) -> Grove:
    """Right part of the sum, the reflection of the left one."""
    g = as_grove(g, BINARY)
    h = as_grove(h, BINARY)
    out: set[PBTree] = set()
    for x in g:
        for y in h:
            out |= _right_trees(x, y)
    return Grove(out)


# ---------------------------------------------------------------------------
# multiplication

_ZERO_GROVE_B = Grove([LEAF])


@lru_cache(maxsize=None)
def _mul_tree(x: PBTree, h: Grove) -> Grove:
    if x.is_leaf:
        return _ZERO_GROVE_B
    part = h if x.left.is_leaf else right_sum(_mul_tree(x.left, h), h)
    if x.right.is_leaf:
        return part
    return left_sum(part, _mul_tree(x.right, h))


def multiply(g, h) -> Grove:
    """Product of groves: substitute h for every unit of each member of g.

    Computed by the graft recursion x*y = (xl*y) +> y <+ (xr*y); the test
    suite cross-checks it against evaluating universal expressions.
    Degrees multiply, so the result degree is checked against the cap.
    """
    g = as_grove(g, BINARY)
    h = as_grove(h, BINARY)
    if g.degree == 0 or h.degree == 0:
        return _ZERO_GROVE_B
    check_degree_cap(g.degree * h.degree, BINARY)
    out: set[PBTree] = set()
    for x in g:
        out.update(_mul_tree(x, h).trees)
    return Grove(out)


# ---------------------------------------------------------------------------
# primes and factorization

_FACTOR_SEARCH_CAP = 9


def factor(g) -> frozenset[tuple[Grove, Grove]]:
    """All ordered pairs of groves of degree >= 2 whose product equals g.

    Exhaustive over subsets of the divisor-degree total groves, pruned by
    the per-tree-pair containment test.  The search is exponential, so
    composite degrees above the search cap are refused.
    """
    g = as_grove(g, BINARY)
    d = g.degree
    if d < 1:
        raise GroveError("factorization needs degree at least 1")
    check_degree_cap(d, BINARY)
    pairs = [(a, d // a) for a in range(2, d) if d % a == 0 and d // a >= 2]
    if pairs and d > _FACTOR_SEARCH_CAP:
        raise DegreeCapError(
            f"factor search is capped at composite degree {_FACTOR_SEARCH_CAP}"
        )
    index = {t: i for i, t in enumerate(g.trees)}
    full = (1 << len(g)) - 1
    found = set()
    for d1, d2 in pairs:
        lhs = enumerate_binary(d1)
        rhs = enumerate_binary(d2)
        masks: dict[tuple[PBTree, PBTree], int | None] = {}
        for x in lhs:
            for y in rhs:
                prod = _mul_tree(x, Grove([y]))
                if all(t in index for t in prod):
                    masks[x, y] = sum(1 << index[t] for t in prod)
                else:
                    masks[x, y] = None
        for a_bits in range(1, 1 << len(lhs)):
            a_trees = [t for i, t in enumerate(lhs) if a_bits >> i & 1]
            allowed = [y for y in rhs if all(masks[x, y] is not None for x in a_trees)]
            if not allowed:
                continue
            for b_bits in range(1, 1 << len(allowed)):
                b_trees = [t for i, t in enumerate(allowed) if b_bits >> i & 1]
                union = 0
                for x in a_trees:
                    for y in b_trees:
                        union |= masks[x, y]
                if union == full:
                    found.add((Grove(a_trees), Grove(b_trees)))
    return frozenset(found)


def is_prime(g) -> bool:
    """True when g is not the product of two groves other than the unit."""
    return not factor(g)
