"""Shared shorthand and independent oracles for the test suite."""

from __future__ import annotations

from grovecalc import binary
from grovecalc.notation import decode
from grovecalc.trees import Grove, PTree, enumerate_binary


def bt(name):
    return decode(name, "binary")


def pt(name):
    return decode(name, "planar")


def bgrove(*names):
    return Grove(bt(nm) for nm in names)


def pgrove(*names):
    return Grove(pt(nm) for nm in names)


def rotation_closure_leq(n):
    """Order oracle: reachability in the graph of single left-to-right moves."""
    ts = enumerate_binary(n)
    index = {t: i for i, t in enumerate(ts)}
    reach = [{i} for i in range(len(ts))]
    edges = [[index[u] for u in binary.rotations(t)] for t in ts]
    changed = True
    while changed:
        changed = False
        for i in range(len(ts)):
            grown = set()
            for j in reach[i]:
                for k in edges[j]:
                    if k not in reach[i]:
                        grown.add(k)
            if grown:
                reach[i] |= grown
                changed = True

    def leq(x, y):
        return index[y] in reach[index[x]]

    return ts, leq


def attach_one_leaf(t: PTree) -> set[PTree]:
    """Independent enumeration of the trees obtained from t by sprouting one
    new rightmost leaf: below the root, at any vertex of the rightmost
    path, or in the middle of any edge along it."""
    leaf = PTree.LEAF
    if t.is_leaf:
        return {PTree((leaf, leaf))}

    def inner(u: PTree) -> list[PTree]:
        grown = [PTree((*u.children, leaf))]
        last = u.children[-1]
        grown.append(PTree((*u.children[:-1], PTree((last, leaf)))))
        if not last.is_leaf:
            grown.extend(PTree((*u.children[:-1], v)) for v in inner(last))
        return grown

    return {PTree((t, leaf)), *inner(t)}
