import itertools

import pytest

from grovecalc import binary
from grovecalc.binary import UNIT, UExpr
from grovecalc.notation import sign_pattern
from grovecalc.trees import (
    DegreeCapError,
    FlavorError,
    Grove,
    LEFT,
    MIDDLE,
    RIGHT,
    UndefinedCaseError,
    enumerate_binary,
    mirror,
    total_grove,
)
from helpers import bt, bgrove


def test_universal_expression_examples():
    assert binary.universal_expression(bt("312")) == UExpr(LEFT, UNIT, UExpr(RIGHT, UNIT, UNIT))
    assert binary.universal_expression(bt("131")) == UExpr(LEFT, UExpr(RIGHT, UNIT, UNIT), UNIT)
    assert str(binary.universal_expression(bt("312"))) == "1 <+ (1 +> 1)"
    big = binary.universal_expression(bt("131492141"))
    assert big.unit_count() == 9
    assert big.connectives() == (RIGHT, LEFT, RIGHT, RIGHT, LEFT, LEFT, RIGHT, LEFT)
    with pytest.raises(UndefinedCaseError):
        binary.universal_expression(bt("0"))


def test_expression_evaluates_back_to_its_tree():
    for n in range(1, 6):
        for t in enumerate_binary(n):
            expr = binary.universal_expression(t)
            assert expr.unit_count() == n
            assert binary.eval_uexpr(expr, bt("1")) == Grove([t])


def test_connectives_follow_the_ascent_descent_pattern():
    for n in range(2, 6):
        for t in enumerate_binary(n):
            assert binary.universal_expression(t).connectives() == sign_pattern(t.name)


def test_eval_examples():
    assert binary.eval_uexpr(UExpr(LEFT, UNIT, UNIT), bgrove("12")) == bgrove("1412")
    assert binary.eval_uexpr(UNIT, bgrove("12", "21")) == bgrove("12", "21")
    expr_131 = UExpr(LEFT, UExpr(RIGHT, UNIT, UNIT), UNIT)
    assert binary.eval_uexpr(expr_131, bgrove("21")) == bgrove("216131", "216321")
    expr_213 = UExpr(RIGHT, UExpr(LEFT, UNIT, UNIT), UNIT)
    assert binary.eval_uexpr(expr_213, bgrove("12")) == bgrove("141256", "151236", "151316")


def test_eval_rejects_middle_connective():
    with pytest.raises(FlavorError):
        binary.eval_uexpr(UExpr(MIDDLE, UNIT, UNIT), bgrove("12"))


def test_eval_propagates_undefined_cases_on_the_zero_grove():
    with pytest.raises(UndefinedCaseError):
        binary.eval_uexpr(UExpr(LEFT, UNIT, UNIT), bgrove("0"))


def test_multiply_associativity_small():
    small = [t for n in (1, 2) for t in enumerate_binary(n)]
    for x, y, z in itertools.product(small, repeat=3):
        assert binary.multiply(binary.multiply(x, y), z) == binary.multiply(
            Grove([x]), binary.multiply(y, z)
        )


def test_multiply_examples():
    assert binary.multiply(bt("12"), bt("21")) == bgrove("2141")
    assert binary.multiply(bt("21"), bt("12")) == bgrove("1412")
    assert binary.multiply(bt("12"), bt("12")) == bgrove("1234", "1314")
    assert binary.multiply(bt("21"), bt("21")) == bgrove("4131", "4321")


def test_degree_one_tree_is_neutral():
    one = total_grove(1)
    for n in range(5):
        g = total_grove(n)
        assert binary.multiply(one, g) == g
        assert binary.multiply(g, one) == g
    g = bgrove("1314", "4131")
    assert binary.multiply(one, g) == g
    assert binary.multiply(g, one) == g


def test_multiply_zero_and_degree():
    assert binary.multiply(bt("0"), bgrove("12", "21")) == bgrove("0")
    assert binary.multiply(bgrove("12", "21"), bt("0")) == bgrove("0")
    for dx, dy in [(2, 3), (3, 2), (2, 4)]:
        for x in enumerate_binary(dx)[:2]:
            for y in enumerate_binary(dy)[:2]:
                assert binary.multiply(x, y).degree == dx * dy


def test_multiply_cap():
    with pytest.raises(DegreeCapError):
        binary.multiply(total_grove(4), total_grove(4))


def test_multiply_matches_expression_evaluation():
    for dx in range(1, 4):
        for dy in range(1, 4):
            for x in enumerate_binary(dx):
                for y in enumerate_binary(dy):
                    via_expr = binary.eval_uexpr(binary.universal_expression(x), Grove([y]))
                    assert binary.multiply(x, y) == via_expr


def test_left_distributivity():
    small = [t for n in (1, 2) for t in enumerate_binary(n)]
    for x, y, z in itertools.product(small, repeat=3):
        assert binary.multiply(binary.add(x, y), z) == binary.add(
            binary.multiply(x, z), binary.multiply(y, z)
        )
    for z in small:
        g = bgrove("12", "21")
        union_product = Grove(
            t for x in g for t in binary.multiply(x, z)
        )
        assert binary.multiply(g, z) == union_product


def test_multiply_respects_the_involution():
    small = [t for n in (1, 2, 3) for t in enumerate_binary(n)]
    for x, y in itertools.product(small, repeat=2):
        if x.degree * y.degree <= 9:
            assert mirror(binary.multiply(x, y)) == binary.multiply(mirror(x), mirror(y))


def test_total_groves_multiply():
    for n, m in [(1, 1), (1, 4), (4, 1), (2, 2), (2, 3), (3, 2)]:
        assert binary.multiply(total_grove(n), total_grove(m)) == total_grove(n * m)


def test_factor_and_primes():
    assert binary.factor(bgrove("2141")) == frozenset({(bgrove("12"), bgrove("21"))})
    assert binary.factor(bgrove("1412")) == frozenset({(bgrove("21"), bgrove("12"))})
    assert binary.factor(bgrove("1241")) == frozenset()
    assert binary.is_prime(bgrove("1241"))
    assert binary.is_prime(bgrove("1234"))
    assert binary.is_prime(bgrove("123"))
    assert binary.is_prime(bgrove("1"))
    assert not binary.is_prime(bgrove("2141"))


def test_factor_degree_cap():
    with pytest.raises(DegreeCapError):
        binary.factor(total_grove(10))
    # prime degrees never search, whatever their size
    assert binary.factor(total_grove(7)) == frozenset()


def nonempty_subgroves(degree):
    ts = enumerate_binary(degree)
    for bits in range(1, 1 << len(ts)):
        yield Grove([t for i, t in enumerate(ts) if bits >> i & 1])


@pytest.mark.parametrize("d1,d2", [(2, 2), (2, 3), (3, 2)])
def test_ordered_factorizations_are_unique_at_small_degree(d1, d2):
    seen = {}
    for a in nonempty_subgroves(d1):
        for b in nonempty_subgroves(d2):
            g = binary.multiply(a, b)
            assert seen.setdefault(g, (a, b)) == (a, b)


def test_every_composite_degree_four_grove_has_one_factorization():
    composite = 0
    for g in nonempty_subgroves(4):
        found = binary.factor(g)
        assert len(found) <= 1
        composite += bool(found)
    assert composite == 9
