"""Exhaustive desk-scale checks of the algebraic identities, grouped into suites.

Each check returns a :class:`CheckResult`; the first failing input (if any)
is kept as the counterexample.  Suites are scaled by ``max_n``; ranges that
grow too fast (the internal product table, the Cartesian oracle) are capped
below it and the cap is reported in ``scope``.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from itertools import permutations

import numpy as np

from . import algebra, catalan, oracle
from .lincomb import LinearCombination, Tensor, change_basis
from .words import (
    catalan as catalan_number,
    enumerate_ndpf,
    enumerate_parking,
    evaluation,
    is_parking,
    standardize,
)

SUITES = ("hopf", "internal", "catalan", "sym", "oracle")


@dataclass
class CheckResult:
    name: str
    scope: str
    passed: bool
    counterexample: str | None
    seconds: float

    def to_dict(self) -> dict:
        return asdict(self)


def _run(name: str, scope: str, search) -> CheckResult:
    start = time.perf_counter()
    witness = None
    for item in search():
        witness = item
        break
    return CheckResult(name, scope, witness is None, witness, time.perf_counter() - start)


def _P(a) -> LinearCombination:
    return LinearCombination.term("P", a)


def _pf_upto(n):
    return [a for k in range(n + 1) for a in enumerate_parking(k)]


# --- hopf ------------------------------------------------------------------

def check_enumeration(max_n: int) -> CheckResult:
    def search():
        from itertools import product

        for n in range(max_n + 1):
            expected = (n + 1) ** (n - 1) if n else 1
            if len(enumerate_parking(n)) != expected:
                yield f"|PF_{n}| = {len(enumerate_parking(n))}"
            if len(enumerate_ndpf(n)) != catalan_number(n):
                yield f"|NDPF_{n}| = {len(enumerate_ndpf(n))}"
            if n <= 4:
                brute = sorted(w for w in product(range(1, n + 1), repeat=n) if is_parking(w))
                if brute != enumerate_parking(n):
                    yield f"PF_{n} differs from filtering [n]^n"

    return _run("enumeration counts", f"n <= {max_n}", search)


def _tensor_product_F(x: Tensor, y: Tensor) -> Tensor:
    return algebra.tensor_multiply(x, y, algebra.product_F)


def check_bialgebra(max_n: int) -> CheckResult:
    def search():
        for a in _pf_upto(max_n):
            for b in _pf_upto(max_n - len(a)):
                lhs = algebra.coproduct(algebra.product_F(a, b))
                rhs = _tensor_product_F(algebra.coproduct_F(a), algebra.coproduct_F(b))
                if lhs != rhs:
                    yield f"a={a}, b={b}"

    return _run("Delta(F_a F_b) = Delta(F_a) Delta(F_b)", f"|a|+|b| <= {max_n}", search)


def check_coproduct_on_permutations(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            for s in permutations(range(1, n + 1)):
                expected = Tensor(("F", "F"), [((standardize(s[:k]), standardize(s[k:])), 1) for k in range(n + 1)])
                if algebra.coproduct_F(s) != expected:
                    yield f"sigma={s}"

    return _run("coproduct_F on permutations uses Std", f"n <= {max_n}", search)


def check_G_transposes(max_n: int) -> CheckResult:
    """product_G is dual to coproduct_F, coproduct_G to product_F."""

    def search():
        for n in range(max_n + 1):
            pf_n = enumerate_parking(n)
            for a in _pf_upto(n):
                for b in enumerate_parking(n - len(a)):
                    prod_G = algebra.product_G(a, b)
                    prod_F = algebra.product_F(a, b)
                    for c in pf_n:
                        if prod_G[c] != algebra.coproduct_F(c)[(a, b)]:
                            yield f"<G_{a} G_{b}, F_{c}>"
                        if algebra.coproduct_G(c)[(a, b)] != prod_F[c]:
                            yield f"<Delta G_{c}, F_{a} ⊗ F_{b}>"

    return _run("G product/coproduct are transposes of F coproduct/product", f"degree <= {max_n}", search)


# --- internal --------------------------------------------------------------

GOLDEN_INTERNAL = [
    ((2, 1, 1), (2, 1, 1), (3, 1, 1)),
    ((2, 1, 1), (1, 1, 2), (3, 1, 2)),
    ((2, 1, 1), (1, 2, 1), (3, 2, 1)),
    ((1, 1, 2), (3, 1, 2), (2, 1, 3)),
    ((3, 1, 1, 4, 3, 2, 3, 1), (2, 3, 5, 7, 1, 7, 1, 3), (6, 1, 3, 8, 5, 4, 5, 1)),
]

GOLDEN_CATALAN = [
    ((1, 1, 2, 3), (1, 1, 1, 1), {(1, 1, 3, 4): 1}),
    ((1, 1, 1, 1), (1, 1, 2, 3), {(1, 1, 2, 3): 1}),
    ((1, 1, 2, 3), (1, 1, 1, 2), {(1, 1, 3, 4): 2, (1, 2, 3, 4): 1}),
    ((1, 1, 2, 2), (1, 2, 2, 4), {(1, 1, 3, 4): 1, (1, 2, 3, 3): 1, (1, 2, 3, 4): 2}),
    ((1, 1, 2, 3), (1, 2, 2, 4), {(1, 1, 3, 4): 2, (1, 2, 3, 4): 5}),
]


def check_golden_internal() -> CheckResult:
    def search():
        for a, b, c in GOLDEN_INTERNAL:
            if algebra.internal_product_F(a, b) != c:
                yield f"F_{a} * F_{b}"
        for pi, tau, expected in GOLDEN_CATALAN:
            if catalan.internal_product_P(pi, tau) != LinearCombination("P", expected):
                yield f"P_{pi} * P_{tau}"

    return _run("internal product examples", "10 displayed products", search)


def associativity_failures(n: int) -> np.ndarray:
    """Triples ``(i, j, k)`` of positions in PF_n where associativity fails."""
    _, t = algebra.internal_table(n)
    left = t[t, :]  # left[i, j, k] = (a_i * a_j) * a_k
    right = t[:, t]  # right[i, j, k] = a_i * (a_j * a_k)
    return np.argwhere(left != right)


def check_associativity(max_n: int, samples: int = 0, sample_n: int | None = None, seed: int = 0) -> CheckResult:
    exhaustive = min(max_n, 4)

    def search():
        for n in range(exhaustive + 1):
            bad = associativity_failures(n)
            if len(bad):
                words, _ = algebra.internal_table(n)
                yield "triple " + str(tuple(words[i] for i in bad[0]))
        if samples and sample_n:
            rng = random.Random(seed)
            pf = enumerate_parking(sample_n)
            star = algebra.internal_product_F
            for _ in range(samples):
                a, b, c = rng.choice(pf), rng.choice(pf), rng.choice(pf)
                if star(star(a, b), c) != star(a, star(b, c)):
                    yield f"triple {(a, b, c)}"

    scope = f"exhaustive n <= {exhaustive}"
    if samples and sample_n:
        scope += f"; {samples} random triples at n = {sample_n}"
    return _run("associativity of *", scope, search)


def check_cap_robustness(max_n: int) -> CheckResult:
    top = min(max_n, 4)

    def search():
        for n in range(1, top + 1):
            pf = enumerate_parking(n)
            for a in pf:
                for b in pf:
                    results = {algebra.internal_product_F(a, b, cap) for cap in (n, n + 1, 2 * n, 5 * n)}
                    if len(results) != 1:
                        yield f"a={a}, b={b}: {sorted(results)}"

    return _run("cap robustness of the flattening", f"n <= {top}, cap in n, n+1, 2n, 5n", search)


def check_permutations_internal(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            perms = list(permutations(range(1, n + 1)))
            for s in perms:
                for t in perms:
                    if algebra.internal_product_F(s, t) != s:
                        yield f"sigma={s}, tau={t}"

    return _run("F_sigma * F_tau = F_sigma on permutations", f"n <= {max_n}", search)


def check_left_unit_F(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            for a in enumerate_parking(n):
                if algebra.internal_product_F((1,) * n, a) != a:
                    yield f"a={a}"

    return _run("F_{1^n} is a left unit", f"n <= {max_n}", search)


# --- catalan ---------------------------------------------------------------

def check_closure(max_n: int) -> CheckResult:
    top = min(max_n, 5)

    def search():
        for n in range(top + 1):
            for pi in enumerate_ndpf(n):
                for tau in enumerate_ndpf(n):
                    try:
                        catalan.internal_product_P(pi, tau)
                    except Exception as exc:  # noqa: BLE001 - report any regroup failure
                        yield f"P_{pi} * P_{tau}: {exc}"

    return _run("CQSym_n closed under *", f"n <= {top}", search)


def check_left_unit_J(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            for pi in enumerate_ndpf(n):
                if catalan.internal_product(catalan.J(n), _P(pi)) != _P(pi):
                    yield f"J_{n} * P_{pi}"
        if max_n >= 4:
            witness = catalan.internal_product(_P((1, 1, 2, 3)), catalan.J(4))
            if witness != _P((1, 1, 3, 4)):
                yield f"P_1123 * J_4 = {witness}"

    return _run("J_n left unit, not right unit", f"n <= {max_n}", search)


def check_ribbons(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            for pi in enumerate_ndpf(n):
                x = _P(pi)
                if change_basis(change_basis(x, "R"), "P") != x:
                    yield f"P->R->P at {pi}"
                r = LinearCombination.term("R", pi)
                if change_basis(change_basis(r, "P"), "R") != r:
                    yield f"R->P->R at {pi}"
            if change_basis(catalan.J(n), "R") != LinearCombination.term("R", (1,) * n):
                yield f"J_{n} != R_(1^{n})"

    return _run("ribbon transform round trips", f"n <= {max_n}", search)


def check_cocommutative(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            for pi in enumerate_ndpf(n):
                t = catalan.coproduct_P(pi)
                if t.swap() != t:
                    yield f"Delta P_{pi}"

    return _run("Delta on P is cocommutative", f"n <= {max_n}", search)


def _ndpf_upto(n):
    return [pi for k in range(n + 1) for pi in enumerate_ndpf(k)]


def check_splitting(max_n: int, random_r3: int = 0, seed: int = 0) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            for g in enumerate_ndpf(n):
                for f1 in _ndpf_upto(n):
                    for f2 in enumerate_ndpf(n - len(f1)):
                        if not catalan.splitting_check([_P(f1), _P(f2)], _P(g)):
                            yield f"f=({f1}, {f2}), g={g}"
        rng = random.Random(seed)
        for _ in range(random_r3):
            n = max_n
            cuts = sorted(rng.randint(0, n) for _ in range(2))
            degrees = (cuts[0], cuts[1] - cuts[0], n - cuts[1])
            fs = [_P(rng.choice(enumerate_ndpf(d))) for d in degrees]
            g = _P(rng.choice(enumerate_ndpf(n)))
            if not catalan.splitting_check(fs, g):
                yield f"f={[str(f) for f in fs]}, g={g}"

    scope = f"r = 2, deg g <= {max_n}"
    if random_r3:
        scope += f"; {random_r3} random r = 3 at deg g = {max_n}"
    return _run("splitting formula", scope, search)


# --- sym -------------------------------------------------------------------

def check_sym_stability(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            comps = catalan.compositions(n)
            for I in comps:
                for K in comps:
                    try:
                        catalan.certify(catalan.internal_product(catalan.j_S(I).value, catalan.j_S(K).value))
                    except catalan.NotInSym as exc:
                        yield f"S^{I} * S^{K}: {exc}"

    return _run("j(Sym) closed under *", f"weight <= {max_n}", search)


def check_projector(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            J = catalan.J(n)
            for pi in enumerate_ndpf(n):
                once = catalan.internal_product(_P(pi), J)
                if catalan.internal_product(once, J) != once:
                    yield f"idempotence at {pi}"
                mults = evaluation(pi).packed
                if once != catalan.j_S(mults).value:
                    yield f"P_{pi} * J_{n} = {once}, expected J-product {mults}"

    return _run("x -> x * J_n projects onto Sym", f"n <= {max_n}", search)


def check_ribbon_projector(max_n: int) -> CheckResult:
    def search():
        for n in range(max_n + 1):
            for pi in enumerate_ndpf(n):
                got = catalan.project_to_sym(LinearCombination.term("R", pi)).value
                expected = catalan.j_ribbon(evaluation(pi).packed).value
                if got != expected:
                    yield f"R_{pi} * J_{n}"

    return _run("R_pi * J_n = j(R_c(pi))", f"n <= {max_n}", search)


# --- oracle ----------------------------------------------------------------

def check_oracle_product_G(max_n: int) -> CheckResult:
    k = max_n + 1

    def search():
        for a in _pf_upto(max_n):
            for b in _pf_upto(max_n - len(a)):
                if not oracle.check_product_G(a, b, k):
                    yield f"a={a}, b={b}"

    return _run("oracle: G product", f"|a|+|b| <= {max_n}, k = {k}", search)


def check_oracle_coproduct_G(max_n: int) -> CheckResult:
    def search():
        for a in _pf_upto(max_n):
            if not oracle.check_coproduct_G(a, max_n, max_n):
                yield f"a={a}"

    return _run("oracle: G coproduct via ordered sum", f"|a| <= {max_n}, k1 = k2 = {max_n}", search)


def check_oracle_internal(max_n: int) -> CheckResult:
    top = min(max_n, 3)

    def search():
        for n in range(1, top + 1):
            for a in enumerate_parking(n):
                if not oracle.check_internal_coproduct(a):
                    yield f"a={a}"
            if oracle.fiber_mass(n) != len(enumerate_parking(n)) ** 2:
                yield f"fiber mass at n={n}"

    return _run("oracle: internal coproduct via Cartesian alphabet", f"n <= {top}", search)


def check_oracle_commutative(max_n: int) -> CheckResult:
    top = min(max_n, 3)

    def search():
        for n in range(top + 1):
            if not oracle.check_commutative_well_defined(n, 4):
                yield f"n={n}"
        for n in range(1, top + 1):
            for I in catalan.compositions(n):
                if not oracle.check_qsym_delta(I, 3):
                    yield f"delta M_{I}"

    return _run("oracle: commutative image and QSym internal coproduct", f"degree <= {top}", search)


def check_oracle_quasi_shuffle(max_n: int) -> CheckResult:
    def search():
        for p in range(max_n + 1):
            for q in range(max_n + 1 - p):
                for I in catalan.compositions(p):
                    for K in catalan.compositions(q):
                        if not oracle.check_quasi_shuffle(I, K):
                            yield f"I={I}, K={K}"

    return _run("oracle: quasi-shuffle of M_I", f"|I|+|K| <= {max_n}", search)


def run_suite(suite: str = "all", max_n: int = 4) -> list[CheckResult]:
    """Run one suite (or ``"all"``) and return the results in order."""
    plan = {
        "hopf": [check_enumeration, check_bialgebra, check_coproduct_on_permutations, check_G_transposes],
        "internal": [
            lambda n: check_golden_internal(),
            check_associativity,
            check_cap_robustness,
            check_permutations_internal,
            check_left_unit_F,
        ],
        "catalan": [check_closure, check_left_unit_J, check_ribbons, check_cocommutative, check_splitting],
        "sym": [check_sym_stability, check_projector, check_ribbon_projector],
        "oracle": [
            check_oracle_product_G,
            check_oracle_coproduct_G,
            check_oracle_internal,
            check_oracle_commutative,
            check_oracle_quasi_shuffle,
        ],
    }
    if suite != "all" and suite not in plan:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    names = SUITES if suite == "all" else (suite,)
    return [check(max_n) for name in names for check in plan[name]]
