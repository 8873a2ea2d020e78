import pytest

from twogrp.coeff import AbelianGroup, ab_add, ab_neg
from twogrp.errors import InvalidFactor, ShapeMismatch


def test_trivial_group():
    A = AbelianGroup([])
    assert A.order == 1
    assert A.zero == ()
    assert A.elements() == [()]
    assert A.add((), ()) == ()


def test_cyclic_arithmetic():
    A = AbelianGroup([4])
    assert A.add((3,), (2,)) == (1,)
    assert A.neg((1,)) == (3,)
    assert A.sub((0,), (3,)) == (1,)
    assert A.scale(3, (3,)) == (1,)


def test_product_arithmetic():
    A = AbelianGroup([2, 3])
    assert A.order == 6
    assert A.add((1, 2), (1, 2)) == (0, 1)
    assert A.neg((1, 1)) == (1, 2)


def test_elements_order_and_index():
    A = AbelianGroup([2, 2])
    els = A.elements()
    assert els == [(0, 0), (0, 1), (1, 0), (1, 1)]
    for i, e in enumerate(els):
        assert A.index(e) == i


def test_tables_consistent():
    A = AbelianGroup([2, 3])
    els = A.elements()
    add = A.addition_table()
    neg = A.negation_table()
    n = len(els)
    for i in range(n):
        assert els[neg[i]] == A.neg(els[i])
        for j in range(n):
            assert els[add[i * n + j]] == A.add(els[i], els[j])


def test_invalid_factor_rejected():
    with pytest.raises(InvalidFactor):
        AbelianGroup([1])
    with pytest.raises(InvalidFactor):
        AbelianGroup([0, 2])


def test_check_rejects_bad_elements():
    A = AbelianGroup([2, 2])
    with pytest.raises(ShapeMismatch):
        A.check((1,))
    with pytest.raises(ShapeMismatch):
        A.check((2, 0))
    with pytest.raises(ShapeMismatch):
        ab_add(A, (1, 0), (0, 5))
    with pytest.raises(ShapeMismatch):
        ab_neg(A, (3, 0))


def test_json_round_trip():
    A = AbelianGroup([2, 4])
    assert AbelianGroup.from_json(A.to_json()) == A
