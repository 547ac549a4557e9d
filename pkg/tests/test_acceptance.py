"""Acceptance criteria, one test each.

Every criterion prints a single ``PASS``/``FAIL`` line with its measured
runtime.  Run standalone with ``python tests/test_acceptance.py`` or through
pytest, where the lines are repeated in the terminal summary.
"""

from __future__ import annotations

import sys
import time
from itertools import product

import pytest

from pqsym import algebra, catalan, verify
from pqsym.lincomb import LinearCombination, Tensor
from pqsym.poset import successors
from pqsym.words import (
    catalan as catalan_number,
    enumerate_ndpf,
    enumerate_parking,
    evaluation,
    is_parking,
    parkize,
)

def _lc(basis, *indices):
    return LinearCombination(basis, {tuple(i): 1 for i in indices})


def _all_pass(*results):
    failed = [f"{r.name}: {r.counterexample}" for r in results if not r.passed]
    return not failed, "; ".join(failed)


def golden_examples():
    ev = evaluation((3, 1, 1, 7, 2, 9, 1, 7, 8, 1, 3, 2, 9))
    checks = {
        "Park": parkize((3, 5, 1, 1, 11, 8, 8, 2)).result == (3, 5, 1, 1, 8, 6, 6, 2),
        "F12.F11": algebra.product_F((1, 2), (1, 1))
        == _lc("F", (1, 2, 3, 3), (1, 3, 2, 3), (1, 3, 3, 2), (3, 1, 2, 3), (3, 1, 3, 2), (3, 3, 1, 2)),
        "Delta F3132": algebra.coproduct_F((3, 1, 3, 2))
        == Tensor(
            ("F", "F"),
            {((), (3, 1, 3, 2)): 1, ((1,), (1, 3, 2)): 1, ((2, 1), (2, 1)): 1, ((2, 1, 2), (1,)): 1, ((3, 1, 3, 2), ()): 1},
        ),
        "G12.G11": algebra.product_G((1, 2), (1, 1))
        == _lc(
            "G",
            (1, 2, 1, 1), (1, 2, 2, 2), (1, 2, 3, 3), (1, 3, 1, 1), (1, 3, 2, 2),
            (1, 4, 1, 1), (1, 4, 2, 2), (2, 3, 1, 1), (2, 4, 1, 1), (3, 4, 1, 1),
        ),
        "Delta G41252": algebra.coproduct_G((4, 1, 2, 5, 2))
        == Tensor(
            ("G", "G"),
            {
                ((), (4, 1, 2, 5, 2)): 1,
                ((1,), (3, 1, 4, 1)): 1,
                ((1, 2, 2), (1, 2)): 1,
                ((4, 1, 2, 2), (1,)): 1,
                ((4, 1, 2, 5, 2), ()): 1,
            },
        ),
        "evaluations": (ev.full, ev.packed, ev.unpacked)
        == ((4, 2, 2, 0, 0, 0, 2, 1, 2), (4, 2, 2, 2, 1, 2), (4, 0, 0, 0, 2, 0, 2, 0, 2, 0, 1, 2)),
        "successors": successors((1, 1, 3, 3, 4, 6)) == {(1, 1, 1, 1, 4, 6), (1, 1, 3, 3, 3, 6), (1, 1, 3, 3, 4, 4)},
    }
    failed = [name for name, ok in checks.items() if not ok]
    return not failed, ", ".join(failed)


def internal_golden():
    return _all_pass(verify.check_golden_internal())


def associativity():
    start = time.perf_counter()
    exhaustive = verify.check_associativity(4)
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        return False, f"exhaustive part took {elapsed:.1f}s"
    sampled = verify.check_associativity(0, samples=100_000, sample_n=5, seed=2024)
    return _all_pass(exhaustive, sampled)


def cap_robustness():
    return _all_pass(verify.check_cap_robustness(4))


def hopf_compatibility():
    return _all_pass(verify.check_bialgebra(4), verify.check_G_transposes(4))


def catalan_closure():
    return _all_pass(verify.check_closure(5))


def left_unit():
    return _all_pass(verify.check_left_unit_J(4), verify.check_left_unit_F(4))


def splitting():
    return _all_pass(verify.check_splitting(4, random_r3=1000, seed=7))


def sym_embedding():
    return _all_pass(
        verify.check_sym_stability(5),
        verify.check_projector(4),
        _projection_formulas(5),
    )


def _projection_formulas(n):
    """``P^pi * J_n`` and ``R_pi * J_n`` on every NDPF up to degree ``n``."""

    def search():
        for k in range(n + 1):
            J = catalan.J(k)
            for pi in enumerate_ndpf(k):
                packed = evaluation(pi).packed
                if catalan.internal_product(LinearCombination.term("P", pi), J) != catalan.j_S(packed).value:
                    yield f"P_{pi}"
                ribbon = catalan.project_to_sym(LinearCombination.term("R", pi)).value
                if ribbon != catalan.j_ribbon(packed).value:
                    yield f"R_{pi}"

    return verify._run("projection formulas", f"n <= {n}", search)


def ribbons():
    return _all_pass(verify.check_ribbons(5))


def oracle_suite():
    return _all_pass(
        verify.check_oracle_product_G(4),
        verify.check_oracle_coproduct_G(4),
        verify.check_oracle_internal(3),
        verify.check_oracle_commutative(3),
        verify.check_oracle_quasi_shuffle(4),
    )


def enumeration_counts():
    bad = []
    for n in range(7):
        if len(enumerate_parking(n)) != ((n + 1) ** (n - 1) if n else 1):
            bad.append(f"|PF_{n}|")
        if len(enumerate_ndpf(n)) != catalan_number(n):
            bad.append(f"|NDPF_{n}|")
        if n <= 4:
            brute = sorted(w for w in product(range(1, n + 1), repeat=n) if is_parking(w))
            if brute != enumerate_parking(n):
                bad.append(f"PF_{n} brute force")
    return not bad, ", ".join(bad)


# (number, title, check, time limit in seconds or None)
CRITERIA = [
    (1, "golden examples", golden_examples, 1.0),
    (2, "internal product golden examples", internal_golden, 1.0),
    (3, "associativity: exhaustive n <= 4, 1e5 random triples at n = 5", associativity, None),
    (4, "cap robustness, n <= 4", cap_robustness, None),
    (5, "Hopf compatibility and transposition identities, degree <= 4", hopf_compatibility, None),
    (6, "Catalan closure, n <= 5", catalan_closure, 120.0),
    (7, "left units and non-right-unit witness", left_unit, None),
    (8, "splitting formula: r = 2 exhaustive, 1e3 random r = 3", splitting, None),
    (9, "Sym embedding and projector", sym_embedding, None),
    (10, "ribbon round trip, degree <= 5; J_n = R_1^n", ribbons, None),
    (11, "oracle suite", oracle_suite, 120.0),
    (12, "enumeration counts, n <= 6", enumeration_counts, None),
]


def run_criterion(number, title, check, limit):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok, detail = False, f"took {elapsed:.2f}s, limit {limit:.0f}s"
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}  {title}  ({elapsed:.2f}s)"
    if detail:
        line += f"  {detail}"
    return ok, line


@pytest.mark.parametrize("number, title, check, limit", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, check, limit, acceptance_report):
    ok, line = run_criterion(number, title, check, limit)
    print(line)
    acceptance_report.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
