"""Tree values, groves, enumeration and exact counting.

Two kinds of rooted plane trees are supported: binary trees, where every
internal vertex carries exactly two subtrees, and general planar trees,
where every internal vertex carries at least two.  The degree of a tree is
its number of leaves minus one (for binary trees this equals the number of
internal vertices).  A grove is a non-empty, duplicate-free set of trees
sharing one degree.

Every value here is immutable and hashable.  Trees compare and sort by
their name, the integer sequence produced by reading off subtree degrees;
groves iterate in that canonical order, so all output is deterministic.
Counting uses plain Python integers throughout, never floats.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator

BINARY = "binary"
PLANAR = "planar"

# Connective kinds shared by the partial sums, universal expressions and
# the ascent/descent patterns of names.
LEFT = "left"
RIGHT = "right"
MIDDLE = "middle"


class TreeArithmeticError(Exception):
    """Base class for all grove-arithmetic failures."""


class InvalidNameError(TreeArithmeticError):
    """A sequence of integers is not the name of any tree."""


class DegreeCapError(TreeArithmeticError):
    """An operation would enumerate or build beyond the configured degree cap."""


class UndefinedCaseError(TreeArithmeticError):
    """A partial operation was applied to arguments it is not defined on."""


class FlavorError(TreeArithmeticError):
    """Binary and planar values were mixed without an explicit embedding."""


class GroveError(TreeArithmeticError):
    """A grove constraint (non-empty, single shared degree) was violated."""


# ---------------------------------------------------------------------------
# degree caps

_DEFAULT_CAPS = {BINARY: 12, PLANAR: 9}
_caps = dict(_DEFAULT_CAPS)


def degree_cap(flavor: str) -> int:
    """Current cap on degrees that enumeration and multiplication accept."""
    return _caps[_check_flavor(flavor)]


def set_degree_caps(binary: int | None = None, planar: int | None = None) -> None:
    """Adjust the degree caps; arguments left as None keep their current value."""
    if binary is not None:
        _caps[BINARY] = int(binary)
    if planar is not None:
        _caps[PLANAR] = int(planar)


def check_degree_cap(degree: int, flavor: str) -> None:
    cap = degree_cap(flavor)
    if degree > cap:
        raise DegreeCapError(f"degree {degree} exceeds the {flavor} cap of {cap}")


def _check_flavor(flavor: str) -> str:
    if flavor not in (BINARY, PLANAR):
        raise FlavorError(f"unknown flavor {flavor!r}")
    return flavor


# ---------------------------------------------------------------------------
# tree values

def format_name(entries: tuple[int, ...]) -> str:
    """Render a name: digits run together while all entries fit in one digit."""
    if not entries:
        return "0"
    if max(entries) <= 9:
        return "".join(str(e) for e in entries)
    return "[" + ",".join(str(e) for e in entries) + "]"


class PBTree:
    """A planar binary tree: the leaf, or a root vertex with two subtrees."""

    __slots__ = ("left", "right", "name", "_hash")

    LEAF: "PBTree"

    def __init__(self, left: "PBTree | None" = None, right: "PBTree | None" = None):
        if (left is None) != (right is None):
            raise GroveError("a binary vertex needs exactly two subtrees")
        self.left = left
        self.right = right
        if left is None:
            self.name: tuple[int, ...] = ()
        else:
            n = len(left.name) + len(right.name) + 1
            self.name = (*left.name, n, *right.name)
        self._hash = hash((PBTree, self.name))

    @property
    def degree(self) -> int:
        return len(self.name)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other):
        if not isinstance(other, PBTree):
            return NotImplemented
        return self.name == other.name

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, PBTree):
            return NotImplemented
        return self.name < other.name

    def __str__(self):
        return format_name(self.name)

    def __repr__(self):
        return f"PBTree({format_name(self.name)!r})"


class PTree:
    """A planar tree: the leaf, or a root vertex with at least two subtrees."""

    __slots__ = ("children", "name", "_hash")

    LEAF: "PTree"

    def __init__(self, children: "tuple[PTree, ...]" = ()):
        children = tuple(children)
        if len(children) == 1:
            raise GroveError("a planar vertex needs at least two subtrees")
        self.children = children
        if not children:
            self.name: tuple[int, ...] = ()
        else:
            n = sum(len(c.name) + 1 for c in children) - 1
            parts: list[int] = []
            for i, c in enumerate(children):
                if i:
                    parts.append(n)
                parts.extend(c.name)
            self.name = tuple(parts)
        self._hash = hash((PTree, self.name))

    @property
    def degree(self) -> int:
        return len(self.name)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __eq__(self, other):
        if not isinstance(other, PTree):
            return NotImplemented
        return self.name == other.name

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, PTree):
            return NotImplemented
        return self.name < other.name

    def __str__(self):
        return format_name(self.name)

    def __repr__(self):
        return f"PTree({format_name(self.name)!r})"


PBTree.LEAF = PBTree()
PTree.LEAF = PTree()

Tree = PBTree | PTree


def graft(left: PBTree, right: PBTree) -> PBTree:
    """Join two binary trees under a new root vertex."""
    return PBTree(left, right)


def decompose(x: PBTree) -> tuple[PBTree, PBTree]:
    """Recover the unique pair a non-leaf binary tree was grafted from."""
    if x.is_leaf:
        raise UndefinedCaseError("the leaf does not decompose")
    return x.left, x.right


def graft_many(children: Iterable[PTree]) -> PTree:
    """Join two or more planar trees under a new root vertex."""
    children = tuple(children)
    if len(children) < 2:
        raise GroveError("grafting needs at least two subtrees")
    return PTree(children)


def decompose_many(x: PTree) -> tuple[PTree, ...]:
    """Recover the unique child sequence of a non-leaf planar tree."""
    if x.is_leaf:
        raise UndefinedCaseError("the leaf does not decompose")
    return x.children


def degree(x: Tree) -> int:
    return x.degree


def vertex_count(x: Tree) -> int:
    """Number of internal vertices (equals the degree for binary trees)."""
    if isinstance(x, PBTree):
        return x.degree
    if x.is_leaf:
        return 0
    return 1 + sum(vertex_count(c) for c in x.children)


def mirror(x):
    """Reflect a tree (or every member of a grove) around its root axis."""
    if isinstance(x, Grove):
        return Grove(mirror(t) for t in x)
    if isinstance(x, PBTree):
        return x if x.is_leaf else PBTree(mirror(x.right), mirror(x.left))
    if isinstance(x, PTree):
        return x if x.is_leaf else PTree(tuple(mirror(c) for c in reversed(x.children)))
    raise FlavorError(f"cannot mirror {x!r}")


# ---------------------------------------------------------------------------
# enumeration and counting

@lru_cache(maxsize=None)
def _binary_trees(n: int) -> tuple[PBTree, ...]:
    if n == 0:
        return (PBTree.LEAF,)
    out = []
    for i in range(n):
        for left in _binary_trees(i):
            for right in _binary_trees(n - 1 - i):
                out.append(PBTree(left, right))
    return tuple(sorted(out))


def enumerate_binary(n: int) -> tuple[PBTree, ...]:
    """All binary trees of degree n, in canonical name order."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    check_degree_cap(n, BINARY)
    return _binary_trees(n)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head, *rest)


@lru_cache(maxsize=None)
def _planar_trees(n: int) -> tuple[PTree, ...]:
    if n == 0:
        return (PTree.LEAF,)
    out = []
    for k in range(1, n + 1):
        for comp in _compositions(n - k, k + 1):
            for kids in itertools.product(*(_planar_trees(d) for d in comp)):
                out.append(PTree(kids))
    return tuple(sorted(out))


def enumerate_planar(n: int) -> tuple[PTree, ...]:
    """All planar trees of degree n, in canonical name order."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    check_degree_cap(n, PLANAR)
    return _planar_trees(n)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Number of binary trees of degree n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def super_catalan(n: int) -> int:
    """Number of planar trees of degree n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return 1
    return sum(_forest_count(k + 1, n - k) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def _forest_count(m: int, d: int) -> int:
    # number of sequences of m planar trees whose degrees total d
    if m == 0:
        return 1 if d == 0 else 0
    return sum(super_catalan(i) * _forest_count(m - 1, d - i) for i in range(d + 1))


@lru_cache(maxsize=None)
def _tree_vertex_counts(n: int) -> tuple[int, ...]:
    # index v holds the number of planar trees of degree n with v vertices
    if n == 0:
        return (1,)
    out = [0] * (n + 1)
    for k in range(1, n + 1):
        for v, c in enumerate(_forest_vertex_counts(k + 1, n - k)):
            if c:
                out[v + 1] += c
    return tuple(out)


@lru_cache(maxsize=None)
def _forest_vertex_counts(m: int, d: int) -> tuple[int, ...]:
    if m == 0:
        return (1,) if d == 0 else (0,) * (d + 1)
    out = [0] * (d + 1)
    for d0 in range(d + 1):
        head = _tree_vertex_counts(d0)
        rest = _forest_vertex_counts(m - 1, d - d0)
        for v0, c0 in enumerate(head):
            if not c0:
                continue
            for v1, c1 in enumerate(rest):
                if c1:
                    out[v0 + v1] += c0 * c1
    return tuple(out)


def cell_count(n: int, i: int) -> int:
    """Number of planar trees of degree n with n+1-i internal vertices."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if not 1 <= i <= n:
        raise ValueError(f"cell index must lie in 1..{n}, got {i}")
    counts = _tree_vertex_counts(n)
    v = n + 1 - i
    return counts[v] if v < len(counts) else 0


# ---------------------------------------------------------------------------
# groves

class Grove:
    """A non-empty, duplicate-free set of trees of one degree.

    Equality and membership are plain set semantics; iteration and printing
    run in canonical name order.
    """

    __slots__ = ("trees", "_members", "_hash")

    def __init__(self, trees: Iterable[Tree]):
        pool = list(trees)
        if not pool:
            raise GroveError("a grove cannot be empty")
        kind = type(pool[0])
        if kind not in (PBTree, PTree):
            raise FlavorError(f"not a tree: {pool[0]!r}")
        deg = pool[0].degree
        for t in pool[1:]:
            if type(t) is not kind:
                raise FlavorError("cannot mix binary and planar trees in one grove")
            if t.degree != deg:
                raise GroveError("grove members must share one degree")
        self.trees: tuple[Tree, ...] = tuple(sorted(set(pool)))
        self._members = frozenset(self.trees)
        self._hash = hash((Grove, self.trees))

    @property
    def degree(self) -> int:
        return self.trees[0].degree

    @property
    def flavor(self) -> str:
        return BINARY if isinstance(self.trees[0], PBTree) else PLANAR

    def names(self) -> tuple[str, ...]:
        return tuple(format_name(t.name) for t in self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __contains__(self, tree) -> bool:
        return tree in self._members

    def __eq__(self, other):
        if not isinstance(other, Grove):
            return NotImplemented
        return self._members == other._members

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "{" + ", ".join(self.names()) + "}"

    def __repr__(self):
        return f"Grove({str(self)!r})"


def grove_make(trees: Iterable[Tree]) -> Grove:
    """Build a grove from trees, deduplicating and sorting."""
    return Grove(trees)


def grove_union(g: Grove, h: Grove) -> Grove:
    """Union of two groves of the same flavor and degree."""
    if g.flavor != h.flavor:
        raise FlavorError("cannot unite binary and planar groves")
    if g.degree != h.degree:
        raise GroveError("cannot unite groves of different degrees")
    return Grove(g.trees + h.trees)


def total_grove(n: int, flavor: str = BINARY) -> Grove:
    """The grove of every tree of degree n."""
    _check_flavor(flavor)
    if flavor == BINARY:
        return Grove(enumerate_binary(n))
    return Grove(enumerate_planar(n))


def as_grove(value, flavor: str | None = None) -> Grove:
    """Coerce a tree or grove to a grove, checking the flavor if given."""
    if isinstance(value, Grove):
        g = value
    elif isinstance(value, (PBTree, PTree)):
        g = Grove([value])
    else:
        raise FlavorError(f"expected a tree or grove, got {value!r}")
    if flavor is not None and g.flavor != _check_flavor(flavor):
        raise FlavorError(f"expected a {flavor} value, got a {g.flavor} one")
    return g
