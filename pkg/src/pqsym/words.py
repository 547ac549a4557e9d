"""Words over the positive integers, parking functions and parkization.

Words are plain tuples of positive ints.  Every function here is pure and
returns fresh tuples, so results can be shared freely.

Two different quantities in the literature are both written ``d(w)``: the
parkization pivot (:func:`pivot`) and the fully unpacked evaluation vector
(:attr:`Evaluation.unpacked`).  They are kept apart by name.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InvalidWord, ResourceBoundExceeded

Word = tuple  # tuple[int, ...]

MAX_LETTER = 2**32 - 1
DEFAULT_MAX_DEGREE = 7
TRACE_ROUND_LIMIT = 100_000


def max_degree() -> int:
    """Degree guard for enumerations; ``PQSYM_MAX_DEGREE`` overrides the default 7."""
    value = os.environ.get("PQSYM_MAX_DEGREE")
    if value is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"PQSYM_MAX_DEGREE must be an integer, got {value!r}") from None


def check_degree(n: int) -> None:
    limit = max_degree()
    if n > limit:
        raise ResourceBoundExceeded(
            f"degree {n} exceeds the enumeration limit {limit} "
            "(set PQSYM_MAX_DEGREE to raise it)"
        )


def as_word(letters: Iterable[int]) -> Word:
    """Validate and freeze a sequence of letters."""
    w = tuple(int(x) for x in letters)
    for x in w:
        if not 1 <= x <= MAX_LETTER:
            raise InvalidWord(f"letters must lie in [1, 2^32-1], got {x}")
    return w


def parse_word(text: str) -> Word:
    """Parse ``"3,5,1,1"`` or the compact digit form ``"3511"``.

    Surrounding brackets/parentheses and whitespace are ignored; an empty
    string is the empty word.
    """
    s = text.strip().strip("[]()").strip()
    if not s:
        return ()
    if "," in s:
        parts = [p.strip() for p in s.split(",")]
        if any(not p.isdigit() for p in parts):
            raise InvalidWord(f"malformed word {text!r}")
        return as_word(int(p) for p in parts)
    if not s.isdigit():
        raise InvalidWord(f"malformed word {text!r}")
    return as_word(int(c) for c in s)


def format_word(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def compact(w: Sequence[int]) -> str:
    """Digit-string form when every letter is < 10, else comma form."""
    if all(x < 10 for x in w):
        return "".join(str(x) for x in w)
    return format_word(w)


# --- parking functions -----------------------------------------------------

def is_parking(w: Sequence[int]) -> bool:
    return all(x <= i for i, x in enumerate(sorted(w), start=1))


def is_nondecreasing_parking(w: Sequence[int]) -> bool:
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1)) and is_parking(w)


def breakpoints(a: Sequence[int]) -> set[int]:
    """All ``b`` with exactly ``b`` letters of ``a`` at most ``b``."""
    n = len(a)
    counts = Counter(a)
    found = set()
    below = 0
    for b in range(1, n + 1):
        below += counts.get(b, 0)
        if below == b:
            found.add(b)
    return found


def is_prime(a: Sequence[int]) -> bool:
    return breakpoints(a) == {len(a)}


def shift(w: Sequence[int], k: int) -> Word:
    return tuple(x + k for x in w)


def shifted_concat(*words: Sequence[int]) -> Word:
    """``u . v[|u|]``, folded left over any number of words."""
    out: tuple = ()
    for v in words:
        out = out + shift(v, len(out))
    return out


def shuffle(u: Sequence[int], v: Sequence[int]) -> list[Word]:
    """All interleavings of ``u`` and ``v``, one per choice of positions."""
    u, v = tuple(u), tuple(v)
    n = len(u) + len(v)
    out = []
    for pos in combinations(range(n), len(u)):
        chosen = set(pos)
        iu = iter(u)
        iv = iter(v)
        out.append(tuple(next(iu) if i in chosen else next(iv) for i in range(n)))
    return out


def shifted_shuffle(u: Sequence[int], v: Sequence[int]) -> list[Word]:
    """Interleavings of ``u`` with ``v[|u|]``, as a list with multiplicity."""
    return shuffle(u, shift(v, len(u)))


def standardize(w: Sequence[int]) -> Word:
    """Rank letters 1..n, equal letters ranked left to right."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def pivot(w: Sequence[int]) -> int:
    """Smallest ``i`` with fewer than ``i`` letters at most ``i``; ``n+1`` on parking functions."""
    n = len(w)
    counts = Counter(w)
    below = 0
    for i in range(1, n + 1):
        below += counts.get(i, 0)
        if below < i:
            return i
    return n + 1


@dataclass(frozen=True)
class ParkizationTrace:
    """Rounds of the decrementing algorithm; ``rounds[k] = (pivot, word after the round)``."""

    word: Word
    rounds: tuple
    result: Word


def parkize(w: Sequence[int]) -> ParkizationTrace:
    """Run the parkization algorithm literally, one decrement round at a time.

    Each round computes the pivot of the current word and decrements every
    letter above it.  The number of rounds grows with the size of the gaps in
    ``w``; use :func:`park` when only the result is needed.
    """
    w = as_word(w)
    n = len(w)
    rounds = []
    cur = w
    while True:
        d = pivot(cur)
        if d == n + 1:
            return ParkizationTrace(w, tuple(rounds), cur)
        if len(rounds) >= TRACE_ROUND_LIMIT:
            raise ResourceBoundExceeded(
                f"parkization trace longer than {TRACE_ROUND_LIMIT} rounds; use park()"
            )
        cur = tuple(x - 1 if x > d else x for x in cur)
        rounds.append((d, cur))


def park(w: Sequence[int]) -> Word:
    """Parkization, computed directly from the letter classes.

    Distinct letters are processed upwards; each keeps its distance to the
    previous class, but may not exceed one more than the number of letters
    already placed.
    """
    if not w:
        return ()
    counts = Counter(w)
    new = {}
    placed = 0
    prev = value = None
    for x in sorted(counts):
        if prev is None:
            value = 1
        else:
            value += min(x - prev, placed + 1 - value)
        new[x] = value
        placed += counts[x]
        prev = x
    return tuple(new[x] for x in w)


# --- evaluations -----------------------------------------------------------

@dataclass(frozen=True)
class Evaluation:
    full: tuple
    packed: tuple
    unpacked: tuple


def evaluation(w: Sequence[int]) -> Evaluation:
    """Letter multiplicities: full vector over ``1..max``, zeros removed, and fully unpacked."""
    if not w:
        return Evaluation((), (), ())
    counts = Counter(w)
    full = tuple(counts.get(i, 0) for i in range(1, max(w) + 1))
    packed = tuple(c for c in full if c)
    unpacked: list[int] = []
    for k, c in enumerate(packed):
        unpacked.append(c)
        if k < len(packed) - 1:
            unpacked.extend([0] * (c - 1))
    return Evaluation(full, packed, tuple(unpacked))


def from_evaluation(ev: Sequence[int]) -> Word:
    """The non-decreasing word with the given full evaluation vector."""
    return tuple(i for i, c in enumerate(ev, start=1) for _ in range(c))


def sort_word(w: Sequence[int]) -> Word:
    return tuple(sorted(w))


# --- enumeration -----------------------------------------------------------

def rearrangements(w: Sequence[int]) -> Iterator[Word]:
    """Distinct permutations of ``w`` in lexicographic order."""
    cur = sorted(w)
    n = len(cur)
    while True:
        yield tuple(cur)
        i = n - 2
        while i >= 0 and cur[i] >= cur[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while cur[j] <= cur[i]:
            j -= 1
        cur[i], cur[j] = cur[j], cur[i]
        cur[i + 1:] = reversed(cur[i + 1:])


@lru_cache(maxsize=None)
def _ndpf(n: int) -> tuple:
    out = []

    def extend(prefix, last):
        k = len(prefix)
        if k == n:
            out.append(tuple(prefix))
            return
        for x in range(last, k + 2):
            prefix.append(x)
            extend(prefix, x)
            prefix.pop()

    extend([], 1)
    return tuple(out)


def enumerate_ndpf(n: int) -> list[Word]:
    """Non-decreasing parking functions of length ``n``, lexicographic."""
    check_degree(n)
    return list(_ndpf(n))


@lru_cache(maxsize=None)
def _pf(n: int) -> tuple:
    return tuple(sorted(a for pi in _ndpf(n) for a in rearrangements(pi)))


def enumerate_parking(n: int) -> list[Word]:
    """``PF_n`` in lexicographic order, built as rearrangements of the NDPFs."""
    check_degree(n)
    return list(_pf(n))


def enumerate_prime(n: int) -> list[Word]:
    check_degree(n)
    if n == 0:
        return [()]
    return [a for a in _pf(n) if is_prime(a)]


@lru_cache(maxsize=None)
def orbit(pi: tuple) -> tuple:
    """Distinct rearrangements of ``pi``; for an NDPF these are the F-indices of ``P^pi``."""
    return tuple(rearrangements(pi))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
