"""The Hopf algebra of parking functions in the F and G bases.

Structure constants on basis indices are computed by the ``*_F`` / ``*_G``
functions; :func:`product`, :func:`coproduct`, :func:`internal_product` and
:func:`internal_coproduct` extend them to linear combinations.

The internal product parkizes the word of pairs ``a ⊗ b`` over the
Cartesian alphabet ordered lexicographically.  That alphabet is not an
initial segment of the integers: there are infinitely many letters between
``(x, y)`` and ``(x + 1, 1)``.  Parkization only sees gaps up to the word
length, so :func:`flatten_pairs` replaces each unbounded gap by ``cap``
letters and the result is an ordinary integer word.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache
from itertools import combinations, product as cartesian
from typing import Callable, Sequence

import numpy as np

from .errors import BasisMismatch, DegreeMismatch, ResourceBoundExceeded
from .lincomb import LinearCombination, Tensor
from .words import enumerate_parking, is_parking, park, shifted_shuffle

# PF_n x PF_n is scanned when building a fiber table; 1296^2 pairs at n = 5
INTERNAL_COPRODUCT_MAX_DEGREE = 5


# --- external structure ----------------------------------------------------

def product_F(a: Sequence[int], b: Sequence[int]) -> LinearCombination:
    a, b = tuple(a), tuple(b)
    return LinearCombination("F", Counter(shifted_shuffle(a, b)), len(a) + len(b))


def coproduct_F(a: Sequence[int]) -> Tensor:
    """Sum over deconcatenations ``a = u.v`` of ``F_Park(u) ⊗ F_Park(v)``."""
    a = tuple(a)
    return Tensor(("F", "F"), Counter((park(a[:k]), park(a[k:])) for k in range(len(a) + 1)))


def _relabelings(a: tuple, n: int):
    """Words with the order pattern of ``a`` and letters in ``[n]`` that parkize to ``a``."""
    letters = sorted(set(a))
    for image in combinations(range(1, n + 1), len(letters)):
        relabel = dict(zip(letters, image))
        u = tuple(relabel[x] for x in a)
        if park(u) == a:
            yield u


@lru_cache(maxsize=None)
def _product_G(a: tuple, b: tuple) -> LinearCombination:
    n = len(a) + len(b)
    found = set()
    lefts = list(_relabelings(a, n))
    rights = list(_relabelings(b, n))
    for u in lefts:
        for v in rights:
            c = u + v
            if is_parking(c):
                found.add(c)
    return LinearCombination("G", dict.fromkeys(found, 1), n)


def product_G(a: Sequence[int], b: Sequence[int]) -> LinearCombination:
    """Convolution: parking functions whose prefix parkizes to ``a`` and suffix to ``b``.

    Parkization preserves the order pattern of a word, so each candidate
    prefix is an order-preserving relabelling of ``a`` into ``[n]``.
    """
    return _product_G(tuple(a), tuple(b))


def coproduct_G(a: Sequence[int]) -> Tensor:
    """Split ``a`` at ``0`` and at each breakpoint ``k`` into letters ``<= k`` and ``> k``."""
    a = tuple(a)
    n = len(a)
    terms = []
    below = 0
    counts = Counter(a)
    for k in range(n + 1):
        below += counts.get(k, 0)
        if below != k:
            continue
        left = tuple(x for x in a if x <= k)
        right = park(tuple(x - k for x in a if x > k))
        terms.append(((left, right), 1))
    return Tensor(("G", "G"), terms)


# --- internal structure ----------------------------------------------------

def flatten_pairs(pairs: Sequence[tuple], cap: int) -> tuple:
    """Map a word of pairs to an integer word with the same parkization.

    Distinct pairs are sorted lexicographically and laid out in increasing
    order; the gap to the next pair is the number of alphabet letters
    strictly between them, with every infinite (or large) gap cut to ``cap``.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    keys = sorted(set(pairs))
    value = {}
    prev = None
    v = 0
    for x, y in keys:
        if prev is None:
            below = y - 1 if x == 1 else cap
            v = 1 + min(below, cap)
        else:
            px, py = prev
            gap = y - py - 1 if x == px else cap
            v = v + 1 + min(gap, cap)
        value[(x, y)] = v
        prev = (x, y)
    return tuple(value[p] for p in pairs)


def internal_product_F(a: Sequence[int], b: Sequence[int], cap: int | None = None) -> tuple:
    """Index of ``F_a * F_b``: the parkization of the pair word ``a ⊗ b``."""
    if len(a) != len(b):
        raise DegreeMismatch(f"internal product needs equal degrees, got {len(a)} and {len(b)}")
    n = len(a)
    if cap is None:
        cap = max(n, 1)
    return park(flatten_pairs(list(zip(a, b)), cap))


@lru_cache(maxsize=None)
def internal_table(n: int) -> tuple:
    """``(words, table)`` with ``table[i, j]`` the position of ``words[i] * words[j]``."""
    words = enumerate_parking(n)
    if len(words) ** 2 > 2_000_000:
        raise ResourceBoundExceeded(f"internal product table of degree {n} is too large")
    pos = {w: i for i, w in enumerate(words)}
    table = np.empty((len(words), len(words)), dtype=np.int32)
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            table[i, j] = pos[internal_product_F(a, b)]
    return tuple(words), table


@lru_cache(maxsize=None)
def _fibers(n: int) -> dict:
    if n > INTERNAL_COPRODUCT_MAX_DEGREE:
        raise ResourceBoundExceeded(
            f"internal coproduct enumerates PF_n x PF_n; degree {n} exceeds "
            f"{INTERNAL_COPRODUCT_MAX_DEGREE}"
        )
    words, table = internal_table(n)
    fibers = defaultdict(list)
    for i, j in cartesian(range(len(words)), repeat=2):
        fibers[words[table[i, j]]].append((words[i], words[j]))
    return dict(fibers)


def internal_coproduct_G(a: Sequence[int]) -> Tensor:
    """``delta(G_a)``: sum of ``G_a' ⊗ G_a''`` over pairs whose internal product is ``a``."""
    a = tuple(a)
    return Tensor(("G", "G"), [(pair, 1) for pair in _fibers(len(a)).get(a, [])])


# --- linear extensions -----------------------------------------------------

def _bilinear(f: Callable, x: LinearCombination, y: LinearCombination, basis: str) -> LinearCombination:
    acc: dict = defaultdict(int)
    for i, c in x.items():
        for j, d in y.items():
            img = f(i, j)
            if isinstance(img, tuple):
                acc[img] += c * d
            else:
                for k, e in img.items():
                    acc[k] += c * d * e
    deg = None if None in (x.degree, y.degree) else x.degree + y.degree
    return LinearCombination(basis, acc, deg)


def product(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    """External product of two F-combinations or two G-combinations."""
    if x.basis != y.basis or x.basis not in ("F", "G"):
        raise BasisMismatch(f"external product defined on F·F or G·G, got {x.basis}·{y.basis}")
    f = product_F if x.basis == "F" else product_G
    return _bilinear(f, x, y, x.basis)


def coproduct(x: LinearCombination) -> Tensor:
    if x.basis not in ("F", "G"):
        raise BasisMismatch(f"coproduct here acts on F or G, got {x.basis}")
    f = coproduct_F if x.basis == "F" else coproduct_G
    return linear_tensor(f, x, (x.basis, x.basis))


def internal_product(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    if x.basis != "F" or y.basis != "F":
        raise BasisMismatch(f"internal product acts on F, got {x.basis} and {y.basis}")
    if None not in (x.degree, y.degree) and x.degree != y.degree:
        raise DegreeMismatch(f"internal product needs equal degrees, got {x.degree} and {y.degree}")
    acc: dict = defaultdict(int)
    for i, c in x.items():
        for j, d in y.items():
            acc[internal_product_F(i, j)] += c * d
    return LinearCombination("F", acc, x.degree)


def internal_coproduct(x: LinearCombination) -> Tensor:
    if x.basis != "G":
        raise BasisMismatch(f"internal coproduct acts on G, got {x.basis}")
    return linear_tensor(internal_coproduct_G, x, ("G", "G"))


def linear_tensor(f: Callable, x: LinearCombination, bases: tuple) -> Tensor:
    acc: dict = defaultdict(int)
    for i, c in x.items():
        for k, d in f(i).items():
            acc[k] += c * d
    return Tensor(bases, acc)


def tensor_multiply(x: Tensor, y: Tensor, mult: Callable) -> Tensor:
    """Factorwise product ``(x_1⊗..⊗x_r)(y_1⊗..⊗y_r) = x_1y_1 ⊗ .. ⊗ x_ry_r``.

    ``mult(i, j)`` gives the product of two basis indices as a
    :class:`LinearCombination` (or ``None`` for zero).
    """
    if x.factors != y.factors:
        raise ValueError("tensors have different numbers of factors")
    acc: dict = defaultdict(int)
    for kx, c in x.items():
        for ky, d in y.items():
            partial = [((), c * d)]
            for i, j in zip(kx, ky):
                img = mult(i, j)
                if img is None:
                    partial = []
                    break
                partial = [(k + (m,), e * f) for k, e in partial for m, f in img.items()]
            for k, e in partial:
                acc[k] += e
    return Tensor(x.bases, acc)
