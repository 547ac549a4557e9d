"""The Catalan subalgebra: P and R bases, its dual M basis, and the embedded Sym.

``P^pi`` is the sum of ``F_a`` over the rearrangements of a non-decreasing
parking function ``pi``.  Every operation on P is computed by expanding into
F, applying the PQSym operation and regrouping; regrouping raises
:class:`~pqsym.errors.NotInCatalanSpan` if the result ever leaves the span.

Sym sits inside as the algebra generated by ``J_n = P^{1^n}``.  A product
``J_{i_1}...J_{i_p}`` is the single basis element ``P^pi`` with
``pi = 1^{i_1} • ... • 1^{i_p}``, which gives a direct certificate of
membership.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from . import algebra
from .errors import BasisMismatch, DegreeMismatch, PQSymError
from .lincomb import F_to_P, LinearCombination, P_to_F, Tensor, change_basis
from .poset import P_to_R, R_to_P, ribbon_in_P
from .words import (
    check_degree,
    enumerate_ndpf,
    evaluation,
    orbit,
    shifted_concat,
)

ribbon_from_P = P_to_R
P_from_ribbon = R_to_P


def J(n: int) -> LinearCombination:
    return LinearCombination.term("P", (1,) * n)


def compositions(n: int) -> list[tuple]:
    """Compositions of ``n`` in lexicographic order; ``[()]`` for ``n = 0``."""
    if n == 0:
        return [()]
    return sorted(
        (first,) + rest for first in range(1, n + 1) for rest in compositions(n - first)
    )


def block_word(I: Sequence[int]) -> tuple:
    """``1^{i_1} • 1^{i_2} • ...``: the non-decreasing word of unpacked evaluation ``I``."""
    return shifted_concat(*[(1,) * i for i in I])


# --- structure constants on P indices --------------------------------------

@lru_cache(maxsize=None)
def product_P(pi: tuple, tau: tuple) -> LinearCombination:
    x = algebra.product(P_to_F(LinearCombination.term("P", pi)), P_to_F(LinearCombination.term("P", tau)))
    return F_to_P(x)


@lru_cache(maxsize=None)
def coproduct_P(pi: tuple) -> Tensor:
    acc: dict = defaultdict(int)
    for a in orbit(pi):
        for (u, v), c in algebra.coproduct_F(a).items():
            acc[(u, v)] += c
    # regroup each leg: the F ⊗ F tensor must be constant on (rearrangement x rearrangement) classes
    by_left: dict = defaultdict(dict)
    for (u, v), c in acc.items():
        by_left[u][v] = c
    half: dict = defaultdict(dict)
    for u, row in by_left.items():
        for tau, c in F_to_P(LinearCombination("F", row)).items():
            half[tau][u] = c
    out = {}
    for tau, column in half.items():
        for sigma, c in F_to_P(LinearCombination("F", column)).items():
            out[(sigma, tau)] = c
    return Tensor(("P", "P"), out)


@lru_cache(maxsize=None)
def internal_product_P(pi: tuple, tau: tuple) -> LinearCombination:
    if len(pi) != len(tau):
        raise DegreeMismatch(f"internal product needs equal degrees, got {len(pi)} and {len(tau)}")
    acc: dict = defaultdict(int)
    for a in orbit(pi):
        for b in orbit(tau):
            acc[algebra.internal_product_F(a, b)] += 1
    return F_to_P(LinearCombination("F", acc, len(pi)))


# --- linear extensions on P or R -------------------------------------------

def _to_P(x: LinearCombination) -> LinearCombination:
    if x.basis not in ("P", "R", "F"):
        raise BasisMismatch(f"expected a Catalan element in P, R or F, got basis {x.basis}")
    return change_basis(x, "P")


def _bilinear(table, x: LinearCombination, y: LinearCombination) -> LinearCombination:
    acc: dict = defaultdict(int)
    for i, c in x.items():
        for j, d in y.items():
            for k, e in table(i, j).items():
                acc[k] += c * d * e
    return LinearCombination("P", acc)


def product(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    """External product in P, returned in the basis of ``x``."""
    out = _bilinear(product_P, _to_P(x), _to_P(y))
    if out.degree is None and None not in (x.degree, y.degree):
        out = LinearCombination.zero("P", x.degree + y.degree)
    return change_basis(out, x.basis)


def internal_product(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    """Internal product ``x * y`` in P, returned in the basis of ``x``."""
    if None not in (x.degree, y.degree) and x.degree != y.degree:
        raise DegreeMismatch(f"internal product needs equal degrees, got {x.degree} and {y.degree}")
    out = _bilinear(internal_product_P, _to_P(x), _to_P(y))
    if out.degree is None:
        out = LinearCombination.zero("P", x.degree)
    return change_basis(out, x.basis)


def coproduct(x: LinearCombination) -> Tensor:
    """Coproduct of a P (or R) element; both legs returned in the basis of ``x``."""
    basis = x.basis
    t = algebra.linear_tensor(coproduct_P, _to_P(x), ("P", "P"))
    if basis == "P":
        return t
    acc: dict = defaultdict(int)
    for (u, v), c in t.items():
        left = change_basis(LinearCombination.term("P", u), basis)
        right = change_basis(LinearCombination.term("P", v), basis)
        for i, d in left.items():
            for j, e in right.items():
                acc[(i, j)] += c * d * e
    return Tensor((basis, basis), acc)


def iterated_coproduct(g: LinearCombination, r: int) -> Tensor:
    """``Delta^r(g)`` in ``P^{⊗ r}``, splitting the last factor repeatedly."""
    if r < 1:
        raise ValueError("r must be at least 1")
    g = _to_P(g)
    t = Tensor(("P",), {(k,): c for k, c in g.items()})
    for _ in range(r - 1):
        acc: dict = defaultdict(int)
        for key, c in t.items():
            for (u, v), d in coproduct_P(key[-1]).items():
                acc[key[:-1] + (u, v)] += c * d
        t = Tensor(t.bases + ("P",), acc)
    return t


# --- Sym inside CQSym ------------------------------------------------------

@dataclass(frozen=True)
class NSymElement:
    """An element of the image of Sym, with its expansion on the ``j(S^I)``."""

    value: LinearCombination
    s_coeffs: dict = field(default_factory=dict)

    @property
    def degree(self):
        return self.value.degree

    def _format(self, body) -> str:
        if not self.s_coeffs:
            return "0"
        parts = []
        for i, (I, c) in enumerate(sorted(self.s_coeffs.items())):
            sign = "-" if c < 0 else ("" if i == 0 else "+")
            text = body(I) if abs(c) == 1 else f"{abs(c)}*{body(I)}"
            parts.append(sign + text if i == 0 else f" {sign} {text}")
        return "".join(parts)

    def s_form(self) -> str:
        return self._format(lambda I: f"S[{','.join(map(str, I))}]")

    def j_form(self) -> str:
        """The element written with products of ``J(n)``."""
        return self._format(lambda I: "*".join(f"J({k})" for k in I) or "J(0)")

    def __str__(self) -> str:
        return f"{self.j_form()} = {self.value}"


class NotInSym(PQSymError, ValueError):
    pass


@lru_cache(maxsize=None)
def j_S_value(I: tuple) -> LinearCombination:
    """``J_{i_1} ... J_{i_p}`` computed by repeated external products."""
    return reduce(lambda acc, k: product(acc, J(k)), I, J(0))


def j_S(I: Sequence[int]) -> NSymElement:
    I = tuple(I)
    return NSymElement(j_S_value(I), {I: 1})


def j_ribbon(I: Sequence[int]) -> NSymElement:
    """Image of the ribbon ``R_I``: the Catalan ribbon indexed by the block word of ``I``."""
    value = ribbon_in_P(block_word(I))
    return certify(value)


def certify(x: LinearCombination) -> NSymElement:
    """Write a P-combination on the ``j(S^I)``, or raise :class:`NotInSym`."""
    x = _to_P(x)
    coeffs = {}
    for pi, c in x.items():
        I = evaluation(pi).packed
        if j_S_value(I) != LinearCombination.term("P", pi):
            raise NotInSym(f"P[{','.join(map(str, pi))}] is not a product of J's")
        coeffs[I] = c
    return NSymElement(x, coeffs)


def project_to_sym(x: LinearCombination) -> NSymElement:
    """``x * J_n``, a projector of the degree-``n`` component onto Sym."""
    x = _to_P(x)
    if x.degree is None:
        return NSymElement(x, {})
    return certify(internal_product(x, J(x.degree)))


def splitting_sides(fs: Sequence[LinearCombination], g: LinearCombination):
    """Both sides of ``(f_1...f_r) * g = mu_r[(f_1 ⊗ ... ⊗ f_r) *_r Delta^r(g)]``.

    ``*_r`` acts factor by factor and is zero on factors of different degree.
    """
    fs = [_to_P(f) for f in fs]
    g = _to_P(g)
    total = sum(f.degree for f in fs)
    if g.degree is not None and total != g.degree:
        raise DegreeMismatch(f"factors have total degree {total}, g has degree {g.degree}")
    lhs = internal_product(reduce(product, fs), g)

    def star(i, j):
        return internal_product_P(i, j) if len(i) == len(j) else None

    mixed = algebra.tensor_multiply(Tensor.from_lincombs(*fs), iterated_coproduct(g, len(fs)), star)
    acc: dict = defaultdict(int)
    for key, c in mixed.items():
        term = reduce(product, [LinearCombination.term("P", k) for k in key])
        for k, d in term.items():
            acc[k] += c * d
    rhs = LinearCombination("P", acc, total)
    return lhs, rhs


def splitting_check(fs: Sequence[LinearCombination], g: LinearCombination) -> bool:
    lhs, rhs = splitting_sides(fs, g)
    return lhs == rhs


# --- the dual basis M ------------------------------------------------------

@lru_cache(maxsize=None)
def product_M(sigma: tuple, tau: tuple) -> LinearCombination:
    """Transpose of the P coproduct: coefficient of ``M_pi`` is that of ``P^sigma ⊗ P^tau`` in ``Delta P^pi``."""
    n = len(sigma) + len(tau)
    check_degree(n)
    out = {pi: coproduct_P(pi)[(sigma, tau)] for pi in enumerate_ndpf(n)}
    return LinearCombination("M", out, n)


@lru_cache(maxsize=None)
def _internal_M_table(n: int) -> dict:
    table: dict = defaultdict(dict)
    ndpf = enumerate_ndpf(n)
    for sigma in ndpf:
        for tau in ndpf:
            for pi, c in internal_product_P(sigma, tau).items():
                table[pi][(sigma, tau)] = c
    return dict(table)


def internal_coproduct_M(pi: tuple) -> Tensor:
    """Transpose of the P internal product."""
    pi = tuple(pi)
    return Tensor(("M", "M"), _internal_M_table(len(pi)).get(pi, {}))


def product_M_lc(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    if x.basis != "M" or y.basis != "M":
        raise BasisMismatch(f"M product needs two M elements, got {x.basis} and {y.basis}")
    acc: dict = defaultdict(int)
    for i, c in x.items():
        for j, d in y.items():
            for k, e in product_M(i, j).items():
                acc[k] += c * d * e
    deg = None if None in (x.degree, y.degree) else x.degree + y.degree
    return LinearCombination("M", acc, deg)


def internal_coproduct_M_lc(x: LinearCombination) -> Tensor:
    if x.basis != "M":
        raise BasisMismatch(f"expected an M element, got {x.basis}")
    return algebra.linear_tensor(internal_coproduct_M, x, ("M", "M"))


def qsym_embed(I: Iterable[int]) -> LinearCombination:
    """``M_I`` as the sum of ``M_pi`` over NDPFs whose packed evaluation is ``I``."""
    I = tuple(I)
    n = sum(I)
    return LinearCombination(
        "M", {pi: 1 for pi in enumerate_ndpf(n) if evaluation(pi).packed == I}, n
    )

