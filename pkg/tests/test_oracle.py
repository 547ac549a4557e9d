from collections import Counter

import pytest

from pqsym import oracle
from pqsym.catalan import compositions
from pqsym.errors import ResourceBoundExceeded
from pqsym.words import enumerate_parking


def _upto(n):
    return [a for k in range(n + 1) for a in enumerate_parking(k)]


def test_realizations_small():
    assert oracle.realize_G((1, 1), 3) == Counter({(1, 1): 1, (2, 2): 1, (3, 3): 1})
    assert oracle.realize_G((1,), 4) == Counter({(i,): 1 for i in range(1, 5)})
    assert oracle.realize_G((1, 2), 3) == Counter({(1, 2): 1, (1, 3): 1, (2, 3): 1})


def test_realization_guard():
    with pytest.raises(ResourceBoundExceeded):
        oracle.realize_G((1,) * 7, 8)


def test_product_example():
    assert oracle.check_product_G((1, 2), (1, 1), 4)
    assert oracle.check_product_G((), (2, 1), 3)


def test_product_sweep():
    for a in _upto(4):
        for b in _upto(4 - len(a)):
            assert oracle.check_product_G(a, b, 5), (a, b)


def test_coproduct_example():
    assert oracle.check_coproduct_G((4, 1, 2, 5, 2), 5, 5)


def test_coproduct_sweep():
    for a in _upto(4):
        assert oracle.check_coproduct_G(a, 4, 4), a


@pytest.mark.parametrize("k", [3, 4])
def test_alphabet_size_stability(k):
    for a in _upto(3):
        assert oracle.check_coproduct_G(a, k, k + 1)
        for b in _upto(3 - len(a)):
            assert oracle.check_product_G(a, b, k)


def test_fiber_contains_displayed_product():
    assert ((2, 1, 1), (2, 1, 1)) in oracle.fiber((3, 1, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_internal_coproduct(n):
    for a in enumerate_parking(n):
        assert oracle.check_internal_coproduct(a), a


def test_fiber_mass():
    assert [oracle.fiber_mass(n) for n in (1, 2, 3)] == [1, 9, 256]


def test_commutative_image():
    assert oracle.commutative_realize((1, 1), 3) == Counter({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    for n in range(4):
        assert oracle.check_commutative_well_defined(n, 4)


@pytest.mark.parametrize("I", [c for n in range(1, 4) for c in compositions(n)])
def test_qsym_internal_coproduct(I):
    assert oracle.check_qsym_delta(I, 3)


def test_quasi_shuffle_recursion():
    assert oracle.quasi_shuffle((1,), (1,)) == Counter({(1, 1): 2, (2,): 1})


def test_quasi_shuffle_sweep():
    for p in range(5):
        for q in range(5 - p):
            for I in compositions(p):
                for K in compositions(q):
                    assert oracle.check_quasi_shuffle(I, K), (I, K)
