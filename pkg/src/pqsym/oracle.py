"""Brute-force checks through the polynomial realization over finite alphabets.

``G_a(A)`` is the sum of all words over ``A`` whose parkization is ``a``.
Everything here is computed by enumerating words and running the literal
decrementing algorithm (:func:`pqsym.words.parkize`); the fast paths in
:mod:`pqsym.algebra` and :mod:`pqsym.catalan` are only called to obtain the
claims being checked.

Ordered sums and Cartesian products of alphabets are realised inside the
positive integers.  Their blocks are separated by ``n`` unused letters; for
words of length ``n`` such a gap parkizes exactly like an infinite one.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache
from itertools import combinations, product

from . import algebra, catalan
from .errors import ResourceBoundExceeded
from .words import enumerate_ndpf, enumerate_parking, orbit, parkize

MAX_WORDS = 10**6


def _guard(size: int, n: int) -> None:
    if size**n > MAX_WORDS:
        raise ResourceBoundExceeded(f"{size}^{n} words exceeds the oracle bound {MAX_WORDS}")


def _park(w: tuple) -> tuple:
    return parkize(w).result


@lru_cache(maxsize=None)
def _realizations(n: int, alphabet: tuple) -> dict:
    """Words of length ``n`` over ``alphabet`` grouped by parkization."""
    _guard(len(alphabet), n)
    groups = defaultdict(Counter)
    for w in product(alphabet, repeat=n):
        groups[_park(w)][w] += 1
    return dict(groups)


def realize_G(a, k: int) -> Counter:
    """``G_a`` over the alphabet ``{1, ..., k}`` as a multiset of words."""
    a = tuple(a)
    return Counter(_realizations(len(a), tuple(range(1, k + 1))).get(a, {}))


def check_product_G(a, b, k: int) -> bool:
    """``G_a(A) G_b(A)`` (concatenation) equals the realization of ``G_a G_b``."""
    a, b = tuple(a), tuple(b)
    lhs = Counter()
    for u, c in realize_G(a, k).items():
        for v, d in realize_G(b, k).items():
            lhs[u + v] += c * d
    rhs = Counter()
    for w, c in algebra.product_G(a, b).items():
        for word, d in realize_G(w, k).items():
            rhs[word] += c * d
    return lhs == rhs


def _ordered_sum(k1: int, k2: int, n: int) -> tuple:
    """``[k1]`` followed, after ``n`` unused letters, by a copy of ``[k2]``."""
    return tuple(range(1, k1 + 1)) + tuple(range(k1 + n + 1, k1 + n + k2 + 1))


def check_coproduct_G(a, k1: int, k2: int) -> bool:
    """``G_a`` over the ordered sum ``A' + A''`` equals ``Delta G_a`` realized leg by leg."""
    a = tuple(a)
    n = len(a)
    lhs = Counter()
    for w, c in _realizations(n, _ordered_sum(k1, k2, n)).get(a, {}).items():
        u = tuple(x for x in w if x <= k1)
        v = tuple(x - k1 - n for x in w if x > k1)
        lhs[(u, v)] += c
    rhs = Counter()
    for (left, right), c in algebra.coproduct_G(a).items():
        for u, d in realize_G(left, k1).items():
            for v, e in realize_G(right, k2).items():
                rhs[(u, v)] += c * d * e
    return lhs == rhs


def _cartesian(k: int, n: int) -> dict:
    """Embedding of ``[k] x [k]`` (lexicographic) with a spacer after each column."""
    width = k + n
    return {(x, y): (x - 1) * width + y for x in range(1, k + 1) for y in range(1, k + 1)}


@lru_cache(maxsize=None)
def _cartesian_realizations(n: int, k: int) -> dict:
    embed = _cartesian(k, n)
    _guard(len(embed), n)
    groups = defaultdict(Counter)
    letters = sorted(embed)
    for w in product(letters, repeat=n):
        u = tuple(x for x, _ in w)
        v = tuple(y for _, y in w)
        groups[_park(tuple(embed[p] for p in w))][(u, v)] += 1
    return dict(groups)


def realize_internal(a, k: int) -> Counter:
    """``G_a(A'A'')``: pairs ``(u, v)`` of words over ``[k]`` whose pair word parkizes to ``a``."""
    a = tuple(a)
    return Counter(_cartesian_realizations(len(a), k).get(a, {}))


def fiber(a) -> list:
    """All ``(a', a'')`` in ``PF_n x PF_n`` with ``F_a' * F_a'' = F_a``, by direct scan."""
    a = tuple(a)
    pf = enumerate_parking(len(a))
    return [(x, y) for x in pf for y in pf if algebra.internal_product_F(x, y) == a]


def _delta_left(t) -> Counter:
    out = Counter()
    for (x, y), c in t.items():
        for (x1, x2), d in algebra.internal_coproduct_G(x).items():
            out[(x1, x2, y)] += c * d
    return out


def _delta_right(t) -> Counter:
    out = Counter()
    for (x, y), c in t.items():
        for (y1, y2), d in algebra.internal_coproduct_G(y).items():
            out[(x, y1, y2)] += c * d
    return out


def check_internal_coproduct(a, k: int | None = None) -> bool:
    """Three independent views of ``delta(G_a)`` agree, and it is coassociative at ``a``.

    1. the fiber scan equals the support/coefficients of ``internal_coproduct_G``;
    2. realizing ``G_a`` over the Cartesian alphabet ``[k] x [k]`` gives
       ``sum G_a'(A') ⊗ G_a''(A'')`` over that fiber;
    3. ``(delta ⊗ id) delta = (id ⊗ delta) delta`` on ``G_a``.
    """
    a = tuple(a)
    n = len(a)
    k = n if k is None else k
    delta = algebra.internal_coproduct_G(a)
    if Counter(fiber(a)) != Counter(dict(delta.items())):
        return False
    rhs = Counter()
    for (x, y), c in delta.items():
        for u, d in realize_G(x, k).items():
            for v, e in realize_G(y, k).items():
                rhs[(u, v)] += c * d * e
    if realize_internal(a, k) != rhs:
        return False
    return _delta_left(delta) == _delta_right(delta)


def fiber_mass(n: int) -> int:
    """Total coefficient mass of ``delta`` over all ``G_a`` of degree ``n``."""
    return sum(sum(c for _, c in algebra.internal_coproduct_G(a).items()) for a in enumerate_parking(n))


# --- commutative image -----------------------------------------------------

def commutative_realize(a, k: int) -> Counter:
    """Commutative image of ``G_a`` over ``x_1..x_k``: exponent vectors with multiplicity."""
    out = Counter()
    for w, c in realize_G(a, k).items():
        exps = [0] * k
        for x in w:
            exps[x - 1] += 1
        out[tuple(exps)] += c
    return out


def check_commutative_well_defined(n: int, k: int) -> bool:
    """``G_a(X)`` depends only on the sorted word of ``a``, and distinct sorted words differ."""
    images = {}
    for pi in enumerate_ndpf(n):
        first = commutative_realize(pi, k)
        if any(commutative_realize(a, k) != first for a in orbit(pi)):
            return False
        images[pi] = frozenset(first.items())
    if k >= n and len(set(images.values())) != len(images):
        return False
    return True


def _poly_mul(p: Counter, q: Counter) -> Counter:
    out = Counter()
    for e, c in p.items():
        for f, d in q.items():
            out[(e, f)] += c * d
    return out


def monomial_qsym_XY(I, k: int) -> Counter:
    """``M_I`` evaluated on the lexicographically ordered alphabet ``x_i y_j``, ``i, j <= k``."""
    letters = [(x, y) for x in range(1, k + 1) for y in range(1, k + 1)]
    out = Counter()
    for chain in combinations(letters, len(I)):
        ex = [0] * k
        ey = [0] * k
        for (x, y), m in zip(chain, I):
            ex[x - 1] += m
            ey[y - 1] += m
        out[(tuple(ex), tuple(ey))] += 1
    return out


def check_qsym_delta(I, k: int) -> bool:
    """``M_I(XY)`` equals the transposed internal coproduct of ``M_I`` realized in ``X`` and ``Y``."""
    I = tuple(I)
    lhs = monomial_qsym_XY(I, k)
    rhs = Counter()
    for (s, t), c in catalan.internal_coproduct_M_lc(catalan.qsym_embed(I)).items():
        for mono, d in _poly_mul(commutative_realize(s, k), commutative_realize(t, k)).items():
            rhs[mono] += c * d
    return +lhs == +rhs


# --- quasi-shuffles --------------------------------------------------------

def quasi_shuffle(I, K) -> Counter:
    """Quasi-shuffle of two compositions, by the usual first-letter recursion."""
    I, K = tuple(I), tuple(K)
    if not I:
        return Counter({K: 1})
    if not K:
        return Counter({I: 1})
    out = Counter()
    for rest, c in quasi_shuffle(I[1:], K).items():
        out[(I[0],) + rest] += c
    for rest, c in quasi_shuffle(I, K[1:]).items():
        out[(K[0],) + rest] += c
    for rest, c in quasi_shuffle(I[1:], K[1:]).items():
        out[(I[0] + K[0],) + rest] += c
    return out


def check_quasi_shuffle(I, K) -> bool:
    """``M_I M_K`` computed in the M basis matches the quasi-shuffle expansion."""
    got = catalan.product_M_lc(catalan.qsym_embed(I), catalan.qsym_embed(K))
    expected = None
    for J, c in quasi_shuffle(I, K).items():
        term = c * catalan.qsym_embed(J)
        expected = term if expected is None else expected + term
    return got == expected
