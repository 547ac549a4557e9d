import random
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pqsym import algebra
from pqsym.errors import BasisMismatch, DegreeMismatch, ResourceBoundExceeded
from pqsym.lincomb import LinearCombination, Tensor, pairing
from pqsym.verify import GOLDEN_INTERNAL, associativity_failures
from pqsym.words import enumerate_parking, park, standardize


def lc(basis, *indices):
    return LinearCombination(basis, {tuple(i): 1 for i in indices})


def test_F_product_example():
    assert algebra.product_F((1, 2), (1, 1)) == lc(
        "F", (1, 2, 3, 3), (1, 3, 2, 3), (1, 3, 3, 2), (3, 1, 2, 3), (3, 1, 3, 2), (3, 3, 1, 2)
    )


def test_F_coproduct_example():
    expected = Tensor(
        ("F", "F"),
        {
            ((), (3, 1, 3, 2)): 1,
            ((1,), (1, 3, 2)): 1,
            ((2, 1), (2, 1)): 1,
            ((2, 1, 2), (1,)): 1,
            ((3, 1, 3, 2), ()): 1,
        },
    )
    assert algebra.coproduct_F((3, 1, 3, 2)) == expected


def test_G_product_example():
    assert algebra.product_G((1, 2), (1, 1)) == lc(
        "G",
        (1, 2, 1, 1), (1, 2, 2, 2), (1, 2, 3, 3), (1, 3, 1, 1), (1, 3, 2, 2),
        (1, 4, 1, 1), (1, 4, 2, 2), (2, 3, 1, 1), (2, 4, 1, 1), (3, 4, 1, 1),
    )


def test_G_coproduct_example():
    expected = Tensor(
        ("G", "G"),
        {
            ((), (4, 1, 2, 5, 2)): 1,
            ((1,), (3, 1, 4, 1)): 1,
            ((1, 2, 2), (1, 2)): 1,
            ((4, 1, 2, 2), (1,)): 1,
            ((4, 1, 2, 5, 2), ()): 1,
        },
    )
    assert algebra.coproduct_G((4, 1, 2, 5, 2)) == expected


def test_units():
    assert algebra.product_F((), (2, 1)) == lc("F", (2, 1))
    assert algebra.product_G((2, 1), ()) == lc("G", (2, 1))
    assert algebra.coproduct_F(()) == Tensor(("F", "F"), {((), ()): 1})


@pytest.mark.parametrize("a, b, c", GOLDEN_INTERNAL)
def test_internal_product_examples(a, b, c):
    assert algebra.internal_product_F(a, b) == c


def test_flatten_pairs_examples():
    assert algebra.flatten_pairs([(2, 2), (1, 1), (1, 1)], 3) == (5, 1, 1)
    assert algebra.flatten_pairs([(1, 3), (1, 1), (2, 2)], 3) == (3, 1, 7)
    with pytest.raises(ValueError):
        algebra.flatten_pairs([(1, 1)], 0)


def test_internal_product_needs_equal_degrees():
    with pytest.raises(DegreeMismatch):
        algebra.internal_product_F((1,), (1, 1))
    with pytest.raises(BasisMismatch):
        algebra.internal_product(lc("G", (1,)), lc("G", (1,)))


def test_internal_product_on_permutations_keeps_left_factor():
    for s in permutations(range(1, 5)):
        for t in permutations(range(1, 5)):
            assert algebra.internal_product_F(s, t) == s


@pytest.mark.parametrize("n", range(5))
def test_left_unit(n):
    for a in enumerate_parking(n):
        assert algebra.internal_product_F((1,) * n, a) == a


@pytest.mark.parametrize("n", range(4))
def test_associativity_table(n):
    assert len(associativity_failures(n)) == 0


pf5 = st.sampled_from(enumerate_parking(5))


@settings(max_examples=300)
@given(pf5, pf5, pf5)
def test_associativity_degree_five(a, b, c):
    star = algebra.internal_product_F
    assert star(star(a, b), c) == star(a, star(b, c))


@settings(max_examples=200)
@given(pf5, pf5, st.integers(5, 40))
def test_cap_does_not_matter(a, b, cap):
    assert algebra.internal_product_F(a, b, cap) == algebra.internal_product_F(a, b)


def test_small_cap_would_be_wrong():
    # a cap of 1 shrinks the gap below letter 4 and breaks the left unit
    assert algebra.internal_product_F((1, 1, 1, 1), (1, 1, 1, 4), 1) == (1, 1, 1, 3)
    assert algebra.internal_product_F((1, 1, 1, 1), (1, 1, 1, 4)) == (1, 1, 1, 4)


def test_internal_table_guard():
    with pytest.raises(ResourceBoundExceeded):
        algebra.internal_table(6)


@pytest.mark.parametrize("n", range(1, 4))
def test_internal_coproduct_fibers_partition(n):
    total = sum(len(algebra.internal_coproduct_G(a)) for a in enumerate_parking(n))
    assert total == len(enumerate_parking(n)) ** 2


def test_internal_coproduct_is_dual_to_internal_product():
    pf = enumerate_parking(3)
    for c in pf:
        delta = algebra.internal_coproduct(lc("G", c))
        for a in pf:
            for b in pf:
                lhs = pairing(algebra.internal_product(lc("F", a), lc("F", b)), lc("G", c))
                assert lhs == delta[(a, b)]


def test_coproduct_on_permutations_standardizes():
    s = (3, 1, 4, 2)
    for (u, v), c in algebra.coproduct_F(s).items():
        k = len(u)
        assert u == standardize(s[:k]) and v == standardize(s[k:]) and c == 1


def test_bialgebra_compatibility_random():
    rng = random.Random(3)
    pf = [a for n in range(3) for a in enumerate_parking(n)]
    for _ in range(30):
        a, b = rng.choice(pf), rng.choice(pf)
        lhs = algebra.coproduct(algebra.product_F(a, b))
        rhs = algebra.tensor_multiply(algebra.coproduct_F(a), algebra.coproduct_F(b), algebra.product_F)
        assert lhs == rhs


def test_G_product_is_transpose_of_F_coproduct():
    for a in enumerate_parking(2):
        for b in enumerate_parking(1):
            prod = algebra.product_G(a, b)
            for c in enumerate_parking(3):
                assert prod[c] == algebra.coproduct_F(c)[(a, b)]


def test_coproduct_parkizes_each_leg():
    for (u, v), _ in algebra.coproduct_F((2, 3, 1, 1)).items():
        assert park(u) == u and park(v) == v


@pytest.mark.parametrize("n, exists", [(1, True), (2, True), (3, False), (4, False)])
def test_right_unit(n, exists):
    # e is a right unit iff F_a * e = F_a for all a: a linear system in the coefficients of e
    words, table = algebra.internal_table(n)
    size = len(words)
    rows, rhs = [], []
    for i in range(size):
        block = np.zeros((size, size))
        block[table[i], np.arange(size)] = 1
        rows.append(block)
        rhs.append(np.eye(size)[i])
    A, b = np.vstack(rows), np.concatenate(rhs)
    solvable = np.linalg.matrix_rank(A) == np.linalg.matrix_rank(np.column_stack([A, b]))
    assert solvable == exists
