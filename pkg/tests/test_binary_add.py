import itertools
import random

import pytest

from grovecalc import binary
from grovecalc.trees import (
    Grove,
    GroveError,
    PBTree,
    UndefinedCaseError,
    enumerate_binary,
    mirror,
    total_grove,
)
from helpers import bt, bgrove, rotation_closure_leq


def trees_upto(d):
    return [t for n in range(1, d + 1) for t in enumerate_binary(n)]


def test_over_under_examples():
    assert binary.over(bt("21"), bt("1")) == bt("213")
    assert binary.under(bt("12"), bt("1")) == bt("131")
    for x in enumerate_binary(3):
        assert binary.over(x, bt("0")) == x
        assert binary.over(bt("0"), x) == x
        assert binary.under(x, bt("0")) == x
        assert binary.under(bt("0"), x) == x


def test_over_under_are_associative():
    for x, y, z in itertools.product(trees_upto(2), repeat=3):
        assert binary.over(binary.over(x, y), z) == binary.over(x, binary.over(y, z))
        assert binary.under(binary.under(x, y), z) == binary.under(x, binary.under(y, z))


def test_over_under_graft_identities():
    for x, y, z in itertools.product(trees_upto(2), repeat=3):
        assert binary.over(x, PBTree(y, z)) == PBTree(binary.over(x, y), z)
        assert PBTree(x, binary.under(y, z)) == binary.under(PBTree(x, y), z)


def test_tamari_examples():
    assert binary.tamari_leq(bt("12"), bt("21"))
    assert binary.tamari_leq(bt("123"), bt("321"))
    assert not binary.tamari_leq(bt("131"), bt("312"))
    assert not binary.tamari_leq(bt("312"), bt("131"))
    for x in enumerate_binary(4):
        assert binary.tamari_leq(x, x)
    with pytest.raises(GroveError):
        binary.tamari_leq(bt("12"), bt("123"))


def test_tamari_matches_rotation_closure():
    for n in range(7):
        ts, oracle = rotation_closure_leq(n)
        for x in ts:
            for y in ts:
                assert binary.tamari_leq(x, y) == oracle(x, y), (x, y)


def test_over_is_below_under():
    for dx in range(5):
        for dy in range(5 - dx):
            for x in enumerate_binary(dx):
                for y in enumerate_binary(dy):
                    assert binary.tamari_leq(binary.over(x, y), binary.under(x, y))


def test_interval_examples():
    assert binary.interval(bt("12"), bt("21")) == bgrove("12", "21")
    assert binary.interval(bt("131"), bt("131")) == bgrove("131")
    assert binary.interval(bt("123"), bt("321")) == Grove(enumerate_binary(3))
    with pytest.raises(GroveError):
        binary.interval(bt("131"), bt("312"))
    with pytest.raises(GroveError):
        binary.interval(bt("12"), bt("123"))


def test_interval_matches_order_filter():
    for n in range(5):
        ts, oracle = rotation_closure_leq(n)
        for lo in ts:
            for hi in ts:
                if not oracle(lo, hi):
                    continue
                want = Grove(z for z in ts if oracle(lo, z) and oracle(z, hi))
                assert binary.interval(lo, hi) == want


def test_sum_examples():
    assert binary.add(bt("1"), bt("1")) == bgrove("12", "21")
    assert binary.add(bt("12"), bt("1")) == bgrove("123", "131")
    assert binary.add(bt("1"), bt("12")) == bgrove("123", "213", "312")
    assert binary.add(bt("21"), bt("12")) == bgrove(
        "2134", "3124", "3214", "4123", "4213", "4312"
    )
    assert binary.add(bt("0"), bt("0")) == bgrove("0")


def test_sum_neutral_element():
    for t in trees_upto(3):
        assert binary.add(t, bt("0")) == Grove([t])
        assert binary.add(bt("0"), t) == Grove([t])


def test_sum_equals_interval_definition():
    for dx in range(4):
        for dy in range(4):
            for x in enumerate_binary(dx):
                for y in enumerate_binary(dy):
                    assert binary.sum_via_interval(x, y) == binary.add(x, y)


def test_sum_distributes_over_union():
    g = bgrove("12", "21")
    h = bgrove("123", "131")
    want = Grove(
        t
        for x in g
        for y in h
        for t in binary.add(x, y)
    )
    assert binary.add(g, h) == want


def test_left_right_examples():
    assert binary.left_sum(bt("1"), bt("1")) == bgrove("21")
    assert binary.right_sum(bt("1"), bt("1")) == bgrove("12")
    assert binary.left_sum(bt("213"), bt("12")) == bgrove("21512")
    assert binary.right_sum(bt("1412"), bt("54131")) == bgrove("141294131")


def test_left_right_zero_conventions():
    x = bt("12")
    assert binary.left_sum(x, bt("0")) == bgrove("12")
    assert binary.right_sum(bt("0"), x) == bgrove("12")
    assert binary.left_sum(bt("0"), x) == bgrove("0")
    assert binary.right_sum(x, bt("0")) == bgrove("0")
    with pytest.raises(UndefinedCaseError):
        binary.left_sum(bt("0"), bt("0"))
    with pytest.raises(UndefinedCaseError):
        binary.right_sum(bt("0"), bt("0"))


def test_sum_splits_disjointly():
    for dx in range(1, 5):
        for dy in range(1, 5):
            for x in enumerate_binary(dx):
                for y in enumerate_binary(dy):
                    left = set(binary.left_sum(x, y).trees)
                    right = set(binary.right_sum(x, y).trees)
                    assert not left & right
                    assert left | right == set(binary.add(x, y).trees)


def test_partial_sums_as_intervals():
    for dx in range(1, 5):
        for dy in range(1, 5):
            for x in enumerate_binary(dx):
                for y in enumerate_binary(dy):
                    lo = PBTree(x.left, binary.over(x.right, y))
                    assert binary.left_sum(x, y) == binary.interval(lo, binary.under(x, y))
                    hi = PBTree(binary.under(x, y.left), y.right)
                    assert binary.right_sum(x, y) == binary.interval(binary.over(x, y), hi)


def test_last_vertex_tricks():
    for dx in range(1, 5):
        for dy in range(5 - dx):
            for x in enumerate_binary(dx):
                for y in enumerate_binary(dy):
                    if x.right.is_leaf:
                        assert binary.left_sum(x, y) == Grove([PBTree(x.left, y)])
                    if not y.is_leaf and y.left.is_leaf:
                        assert binary.right_sum(x, y) == Grove([PBTree(x, y.right)])


def test_dialgebra_relations():
    for x, y, z in itertools.product(trees_upto(3), repeat=3):
        assert binary.left_sum(binary.left_sum(x, y), z) == binary.left_sum(
            Grove([x]), binary.add(y, z)
        )
        assert binary.left_sum(binary.right_sum(x, y), z) == binary.right_sum(
            Grove([x]), binary.left_sum(y, z)
        )
        assert binary.right_sum(binary.add(x, y), z) == binary.right_sum(
            Grove([x]), binary.right_sum(y, z)
        )
    for t in trees_upto(3):
        assert binary.right_sum(bt("0"), t) == Grove([t])
        assert binary.left_sum(t, bt("0")) == Grove([t])


def test_sum_associativity_on_tree_triples():
    for x, y, z in itertools.product(trees_upto(3), repeat=3):
        assert binary.add(binary.add(x, y), z) == binary.add(Grove([x]), binary.add(y, z))


def test_sum_associativity_on_random_groves():
    rng = random.Random(96321)
    pool = trees_upto(3)
    for _ in range(50):
        groves = []
        for _ in range(3):
            deg = rng.choice([1, 2, 3])
            members = [t for t in pool if t.degree == deg]
            size = rng.randint(1, len(members))
            groves.append(Grove(rng.sample(members, size)))
        g, h, k = groves
        assert binary.add(binary.add(g, h), k) == binary.add(g, binary.add(h, k))


def test_total_groves_add():
    for n in range(5):
        for m in range(5 - n):
            assert binary.add(total_grove(n), total_grove(m)) == total_grove(n + m)


def test_pairwise_sums_partition_the_total_grove():
    for n in range(1, 5):
        for m in range(1, 6 - n):
            seen = set()
            for x in enumerate_binary(n):
                for y in enumerate_binary(m):
                    for z in binary.add(x, y):
                        assert z not in seen
                        seen.add(z)
            assert seen == set(enumerate_binary(n + m))


def test_involution_identities():
    for x, y in itertools.product(trees_upto(3), repeat=2):
        assert mirror(binary.add(x, y)) == binary.add(mirror(y), mirror(x))
        assert mirror(binary.left_sum(x, y)) == binary.right_sum(mirror(y), mirror(x))
        assert mirror(binary.right_sum(x, y)) == binary.left_sum(mirror(y), mirror(x))


def test_exercise_hint_identity():
    small = [t for n in range(0, 3) for t in enumerate_binary(n)]
    for a, b, c in itertools.product(small, trees_upto(2), small):
        lhs = binary.left_sum(binary.right_sum(a, b), c)
        want = Grove(
            PBTree(u, v)
            for u in binary.add(a, b.left)
            for v in binary.add(b.right, c)
        )
        assert lhs == want
