"""Successor order on non-decreasing parking functions and the ribbon transform.

The order lives on full evaluation vectors of length ``n`` (trailing zeros
count): a successor merges two nonzero entries separated only by zeros,
putting the sum in the left slot.  ``P^pi`` is the sum of ``R_pi'`` over the
up-set of ``pi``; the inverse is computed by unitriangular elimination.
"""

from __future__ import annotations

from collections import defaultdict, deque
from functools import lru_cache

from .lincomb import LinearCombination
from .words import enumerate_ndpf, from_evaluation


def full_evaluation(pi: tuple) -> list[int]:
    """Evaluation vector of ``pi`` padded to length ``len(pi)``."""
    ev = [0] * len(pi)
    for x in pi:
        ev[x - 1] += 1
    return ev


@lru_cache(maxsize=None)
def successors(pi: tuple) -> frozenset:
    ev = full_evaluation(pi)
    nonzero = [i for i, c in enumerate(ev) if c]
    out = set()
    for i, j in zip(nonzero, nonzero[1:]):
        merged = list(ev)
        merged[i] += merged[j]
        merged[j] = 0
        out.add(from_evaluation(merged))
    return frozenset(out)


@lru_cache(maxsize=None)
def upset(pi: tuple) -> frozenset:
    """``{pi' : pi' >= pi}``, including ``pi`` itself."""
    seen = {pi}
    queue = deque([pi])
    while queue:
        for s in successors(queue.popleft()):
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return frozenset(seen)


def covers(n: int) -> list[tuple]:
    """All cover pairs ``(pi, pi')`` of degree ``n`` in lexicographic order."""
    return sorted((pi, s) for pi in enumerate_ndpf(n) for s in successors(pi))


def leq(pi: tuple, other: tuple) -> bool:
    return other in upset(pi)


@lru_cache(maxsize=None)
def ribbon_in_P(pi: tuple) -> LinearCombination:
    """``R_pi = P^pi - sum over pi' > pi of R_pi'``, expanded in P."""
    acc: dict = defaultdict(int)
    acc[pi] += 1
    for other in upset(pi):
        if other != pi:
            for k, c in ribbon_in_P(other).items():
                acc[k] -= c
    return LinearCombination("P", acc, len(pi))


def P_to_R(x: LinearCombination) -> LinearCombination:
    acc: dict = defaultdict(int)
    for pi, c in x.items():
        for other in upset(pi):
            acc[other] += c
    return LinearCombination("R", acc, x.degree)


def R_to_P(x: LinearCombination) -> LinearCombination:
    acc: dict = defaultdict(int)
    for pi, c in x.items():
        for k, d in ribbon_in_P(pi).items():
            acc[k] += c * d
    return LinearCombination("P", acc, x.degree)
