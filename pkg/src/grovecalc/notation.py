"""The integer-sequence name codec for trees.

A tree of degree n is written as a sequence of n positive integers.  The
maximal entries equal the length and mark the root: a binary name carries
its maximum exactly once, a planar name carries it once per gap between
the root's subtrees.  The empty sequence encodes the leaf and renders as
"0".  Entries above 9 switch rendering to a bracketed, comma-separated
form such as [1,3,1,5,1,11,...].
"""

from __future__ import annotations

from typing import Sequence

from .trees import (
    BINARY,
    LEFT,
    PLANAR,
    RIGHT,
    Grove,
    InvalidNameError,
    PBTree,
    PTree,
    Tree,
    format_name,
)

Name = tuple[int, ...]


def encode(x: Tree) -> Name:
    """Name of a tree; the leaf encodes to the empty sequence."""
    return x.name


def parse_name(text: str) -> Name:
    """Read a rendered name back into an integer sequence.

    Accepts the compact digit form (each character one entry) and the
    bracketed comma form.  This checks lexical shape only; use decode or
    validate to test whether the sequence actually names a tree.
    """
    s = text.strip()
    if s == "0":
        return ()
    if s.startswith("["):
        if not s.endswith("]"):
            raise InvalidNameError(f"unterminated bracket form: {text!r}")
        body = s[1:-1]
        try:
            entries = tuple(int(part) for part in body.split(","))
        except ValueError:
            raise InvalidNameError(f"cannot read a name from {text!r}") from None
    elif s.isdigit():
        entries = tuple(int(ch) for ch in s)
    else:
        raise InvalidNameError(f"cannot read a name from {text!r}")
    if any(e < 1 for e in entries):
        raise InvalidNameError("name entries must be positive integers")
    return entries


def _as_entries(name) -> Name:
    if isinstance(name, str):
        return parse_name(name)
    if isinstance(name, (PBTree, PTree)):
        return name.name
    entries = tuple(int(e) for e in name)
    if any(e < 1 for e in entries):
        raise InvalidNameError("name entries must be positive integers")
    return entries


def decode(name, flavor: str = BINARY) -> Tree:
    """Tree named by a sequence (or rendered string); raises InvalidNameError."""
    entries = _as_entries(name)
    if flavor not in (BINARY, PLANAR):
        raise InvalidNameError(f"unknown flavor {flavor!r}")
    worker = _decode_binary if flavor == BINARY else _decode_planar
    try:
        return worker(entries)
    except InvalidNameError:
        raise InvalidNameError(
            f"{format_name(entries)} is not a {flavor} tree name"
        ) from None


def _decode_binary(entries: Name) -> PBTree:
    if not entries:
        return PBTree.LEAF
    n = len(entries)
    if max(entries) != n or entries.count(n) != 1:
        raise InvalidNameError(f"{format_name(entries)} is not a binary tree name")
    cut = entries.index(n)
    tree = PBTree(_decode_binary(entries[:cut]), _decode_binary(entries[cut + 1:]))
    # valid binary names never repeat an entry in adjacent positions
    assert all(a != b for a, b in zip(entries, entries[1:]))
    return tree


def _decode_planar(entries: Name) -> PTree:
    if not entries:
        return PTree.LEAF
    n = len(entries)
    if max(entries) != n:
        raise InvalidNameError(f"{format_name(entries)} is not a planar tree name")
    cuts = [i for i, e in enumerate(entries) if e == n]
    bounds = [-1, *cuts, n]
    children = tuple(
        _decode_planar(entries[bounds[i] + 1:bounds[i + 1]])
        for i in range(len(bounds) - 1)
    )
    return PTree(children)


def validate(name, flavor: str = BINARY) -> bool:
    """True exactly when the sequence decodes to a tree of the given flavor."""
    try:
        decode(name, flavor)
    except InvalidNameError:
        return False
    return True


def weights(x: PBTree) -> Name:
    """Gap weights of a binary tree, read off at the internal vertices.

    The i-th weight is the degree of the smallest subtree containing both
    leaf i-1 and leaf i; that subtree hangs from the i-th internal vertex
    in left-to-right order.  The weight sequence coincides with the name.
    """
    out: list[int] = []

    def walk(t: PBTree) -> None:
        if t.is_leaf:
            return
        walk(t.left)
        out.append(t.degree)
        walk(t.right)

    walk(x)
    return tuple(out)


def perm_to_tree(perm: Sequence[int] | str) -> PBTree:
    """Collapse a permutation of 1..n to the binary tree it sits over.

    The largest value stays in place; each flank replaces its own largest
    value by the flank length, recursively.
    """
    if isinstance(perm, str):
        entries = parse_name(perm)
    else:
        entries = tuple(int(e) for e in perm)
    if sorted(entries) != list(range(1, len(entries) + 1)):
        raise InvalidNameError(f"{entries!r} is not a permutation of 1..{len(entries)}")

    def collapse(seg: Name) -> Name:
        if not seg:
            return ()
        cut = seg.index(max(seg))
        return (*collapse(seg[:cut]), len(seg), *collapse(seg[cut + 1:]))

    return _decode_binary(collapse(entries))


def sign_pattern(name) -> tuple[str, ...]:
    """Ascent/descent pattern of a binary name: RIGHT at ascents, LEFT at descents."""
    entries = _as_entries(name)
    if len(entries) < 2:
        raise InvalidNameError("sign patterns need a name of length at least 2")
    _decode_binary(entries)
    pattern = []
    for a, b in zip(entries, entries[1:]):
        assert a != b
        pattern.append(RIGHT if a < b else LEFT)
    return tuple(pattern)


def format_tree(x: Tree) -> str:
    return format_name(x.name)


def format_grove(g: Grove) -> str:
    """Canonical brace rendering, members in name order."""
    return str(g)


def parse_grove(text: str, flavor: str = BINARY) -> Grove:
    """Read a single name or a brace-enclosed set of names into a grove."""
    s = text.strip()
    if s.startswith("{"):
        if not s.endswith("}"):
            raise InvalidNameError(f"unterminated grove literal: {text!r}")
        parts = [p for p in s[1:-1].split(",")]
        if not any(p.strip() for p in parts):
            raise InvalidNameError("a grove literal needs at least one name")
        return Grove(decode(part, flavor) for part in parts)
    return Grove([decode(s, flavor)])
