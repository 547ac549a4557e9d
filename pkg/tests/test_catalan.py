import random

import pytest

from pqsym import catalan
from pqsym.errors import BasisMismatch, DegreeMismatch
from pqsym.lincomb import LinearCombination, P_to_F, Tensor, change_basis
from pqsym.poset import covers, full_evaluation, leq, ribbon_in_P, successors, upset
from pqsym.verify import GOLDEN_CATALAN
from pqsym.words import enumerate_ndpf


def P(*pi):
    return LinearCombination.term("P", pi)


def R(*pi):
    return LinearCombination.term("R", pi)


@pytest.mark.parametrize("pi, tau, expected", GOLDEN_CATALAN)
def test_internal_product_examples(pi, tau, expected):
    assert catalan.internal_product_P(pi, tau) == LinearCombination("P", expected)


def test_J_is_left_unit_but_not_right_unit():
    assert catalan.internal_product(catalan.J(4), P(1, 1, 2, 3)) == P(1, 1, 2, 3)
    assert catalan.internal_product(P(1, 1, 2, 3), catalan.J(4)) == P(1, 1, 3, 4)


@pytest.mark.parametrize("n", range(5))
def test_closure_and_left_unit(n):
    for pi in enumerate_ndpf(n):
        assert catalan.internal_product(catalan.J(n), P(*pi)) == P(*pi)
        for tau in enumerate_ndpf(n):
            catalan.internal_product_P(pi, tau)


def test_internal_product_degree_checks():
    with pytest.raises(DegreeMismatch):
        catalan.internal_product(P(1), P(1, 1))
    with pytest.raises(BasisMismatch):
        catalan.internal_product(LinearCombination.term("G", (1,)), P(1))


def test_degree_zero():
    assert catalan.internal_product(P(), P()) == P()
    assert catalan.product(P(), P(1, 2)) == P(1, 2)


def test_successors_example():
    assert successors((1, 1, 3, 3, 4, 6)) == {(1, 1, 1, 1, 4, 6), (1, 1, 3, 3, 3, 6), (1, 1, 3, 3, 4, 4)}
    assert full_evaluation((1, 1, 3)) == [2, 0, 1]


def test_poset_structure():
    assert ((1, 2, 3), (1, 1, 3)) in covers(3)
    assert ((1, 2, 3), (1, 2, 2)) in covers(3)
    assert upset((1, 1, 1)) == {(1, 1, 1)}
    assert leq((1, 2, 3), (1, 1, 1))
    assert not leq((1, 1, 1), (1, 2, 3))
    for n in range(5):
        # 1^n is the unique maximum
        assert all(leq(pi, (1,) * n) for pi in enumerate_ndpf(n))


def test_ribbon_two_chain():
    assert change_basis(P(1, 2), "R") == R(1, 1) + R(1, 2)
    assert ribbon_in_P((1, 2)) == P(1, 2) - P(1, 1)


@pytest.mark.parametrize("n", range(6))
def test_ribbon_round_trip(n):
    for pi in enumerate_ndpf(n):
        assert change_basis(change_basis(P(*pi), "R"), "P") == P(*pi)
        assert change_basis(change_basis(R(*pi), "P"), "R") == R(*pi)
    assert change_basis(catalan.J(n), "R") == R(*(1,) * n)


def test_P_product_matches_F_product():
    from pqsym import algebra

    x, y = P(1, 1), P(1, 2)
    assert P_to_F(catalan.product(x, y)) == algebra.product(P_to_F(x), P_to_F(y))


def test_products_in_ribbon_basis_stay_ribbon():
    x = catalan.product(R(1, 2), R(1))
    assert x.basis == "R"
    assert change_basis(x, "P") == catalan.product(P(1, 2) - P(1, 1), P(1))


@pytest.mark.parametrize("pi", enumerate_ndpf(4))
def test_coproduct_is_cocommutative(pi):
    t = catalan.coproduct_P(pi)
    assert t.swap() == t


def test_coproduct_small():
    assert catalan.coproduct(P(1)) == Tensor(("P", "P"), {((), (1,)): 1, ((1,), ()): 1})


def test_iterated_coproduct_counts_splittings():
    t = catalan.iterated_coproduct(catalan.J(2), 3)
    assert t.factors == 3
    assert sum(c for _, c in t.items()) == 6


def test_splitting_formula_r2():
    for g in enumerate_ndpf(3):
        for k in range(4):
            for f1 in enumerate_ndpf(k):
                for f2 in enumerate_ndpf(3 - k):
                    assert catalan.splitting_check([P(*f1), P(*f2)], P(*g))


def test_splitting_formula_random_r3():
    rng = random.Random(11)
    for _ in range(40):
        cut = sorted(rng.randint(0, 4) for _ in range(2))
        degrees = (cut[0], cut[1] - cut[0], 4 - cut[1])
        fs = [P(*rng.choice(enumerate_ndpf(d))) for d in degrees]
        g = P(*rng.choice(enumerate_ndpf(4)))
        lhs, rhs = catalan.splitting_sides(fs, g)
        assert lhs == rhs


def test_splitting_needs_matching_degree():
    with pytest.raises(DegreeMismatch):
        catalan.splitting_sides([P(1), P(1)], P(1, 1, 1))


def test_M_product_units_and_degree():
    x = catalan.product_M((1,), (1,))
    assert x.degree == 2
    assert catalan.product_M((), (1, 2)) == LinearCombination.term("M", (1, 2))


def test_M_internal_coproduct_is_transpose():
    for sigma in enumerate_ndpf(3):
        for tau in enumerate_ndpf(3):
            prod = catalan.internal_product_P(sigma, tau)
            for pi in enumerate_ndpf(3):
                assert catalan.internal_coproduct_M(pi)[(sigma, tau)] == prod[pi]
