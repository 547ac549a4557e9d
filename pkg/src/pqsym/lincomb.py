"""Exact integer linear combinations over the F, G, P, R and M bases.

A :class:`LinearCombination` is a frozen sparse vector: a basis tag plus a
mapping from indices (tuples of ints) to nonzero Python ints.  A
:class:`Tensor` is the same thing over tuples of indices, one per tensor
factor.  Both keep their terms in lexicographic index order so that
equality, hashing and serialisation are deterministic.
"""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Callable, Iterable, Mapping

from .errors import BasisMismatch, DegreeMismatch, InvalidWord, NotInCatalanSpan
from .words import is_nondecreasing_parking, is_parking, orbit, sort_word

BASES = ("F", "G", "P", "R", "M")
TENSOR_SIGN = "⊗"


def _collect(pairs) -> dict:
    acc: dict = defaultdict(int)
    for k, c in pairs:
        if c:
            acc[k] += c
    return {k: c for k, c in acc.items() if c}


def _format_coeff(c: int, body: str, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    c = abs(c)
    text = body if c == 1 else f"{c}*{body}"
    if first:
        return sign + text
    return f" {sign} {text}"


def format_index(basis: str, index: tuple) -> str:
    return f"{basis}[{','.join(str(x) for x in index)}]"


class LinearCombination:
    """Finite formal sum ``sum c_i X_i`` with integer coefficients in one basis."""

    __slots__ = ("basis", "degree", "_terms", "_hash")

    def __init__(self, basis: str, terms: Mapping | Iterable = (), degree: int | None = None):
        if basis not in BASES:
            raise BasisMismatch(f"unknown basis {basis!r}")
        if isinstance(terms, Mapping):
            terms = terms.items()
        collected = _collect((tuple(k), int(c)) for k, c in terms)
        lengths = {len(k) for k in collected}
        if len(lengths) > 1:
            raise DegreeMismatch(f"inhomogeneous combination, degrees {sorted(lengths)}")
        if lengths:
            (d,) = lengths
            if degree is not None and degree != d:
                raise DegreeMismatch(f"declared degree {degree} but indices have length {d}")
            degree = d
        self.basis = basis
        self.degree = degree
        self._terms = dict(sorted(collected.items()))
        self._hash = None

    @classmethod
    def term(cls, basis: str, index, coeff: int = 1) -> "LinearCombination":
        index = tuple(index)
        return cls(basis, {index: coeff}, degree=len(index))

    @classmethod
    def zero(cls, basis: str, degree: int | None = None) -> "LinearCombination":
        return cls(basis, (), degree)

    # mapping-like access
    def __getitem__(self, index) -> int:
        return self._terms.get(tuple(index), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list:
        return list(self._terms)

    # arithmetic
    def _check_compatible(self, other: "LinearCombination") -> None:
        if not isinstance(other, LinearCombination):
            raise TypeError(f"cannot combine LinearCombination with {type(other).__name__}")
        if other.basis != self.basis:
            raise BasisMismatch(f"basis {self.basis} vs {other.basis}")
        if None not in (self.degree, other.degree) and self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        self._check_compatible(other)
        pairs = list(self._terms.items()) + list(other._terms.items())
        return LinearCombination(self.basis, pairs, self.degree if self.degree is not None else other.degree)

    def __neg__(self) -> "LinearCombination":
        return self * -1

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return LinearCombination(self.basis, {k: c * v for k, v in self._terms.items()}, self.degree)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        if self.basis != other.basis or self._terms != other._terms:
            return False
        # zero vectors of unspecified degree compare equal to any zero
        return self.degree == other.degree or not self._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.basis, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LinearCombination({self.basis!r}, {self._terms!r}, degree={self.degree})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "".join(
            _format_coeff(c, format_index(self.basis, k), i == 0)
            for i, (k, c) in enumerate(self._terms.items())
        )

    def validate(self) -> "LinearCombination":
        """Check every index has the type required by the basis tag."""
        check = is_parking if self.basis in ("F", "G") else is_nondecreasing_parking
        for k in self._terms:
            if not check(k):
                kind = "parking function" if self.basis in ("F", "G") else "non-decreasing parking function"
                raise InvalidWord(f"{format_index(self.basis, k)}: index is not a {kind}")
        return self

    # serialisation
    def to_dict(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [{"index": list(k), "coeff": str(c)} for k, c in self._terms.items()],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> "LinearCombination":
        terms = [(tuple(t["index"]), int(t["coeff"])) for t in data["terms"]]
        return cls(data["basis"], terms, data.get("degree"))

    @classmethod
    def from_json(cls, text: str) -> "LinearCombination":
        return cls.from_dict(json.loads(text))


class Tensor:
    """Element of a tensor power; keys are tuples of indices, one per factor."""

    __slots__ = ("bases", "_terms", "_hash")

    def __init__(self, bases, terms: Mapping | Iterable = ()):
        bases = tuple(bases)
        for b in bases:
            if b not in BASES:
                raise BasisMismatch(f"unknown basis {b!r}")
        if not bases:
            raise ValueError("a tensor needs at least one factor")
        if isinstance(terms, Mapping):
            terms = terms.items()
        collected = _collect((tuple(tuple(i) for i in k), int(c)) for k, c in terms)
        for k in collected:
            if len(k) != len(bases):
                raise ValueError(f"key {k} does not have {len(bases)} factors")
        self.bases = bases
        self._terms = dict(sorted(collected.items()))
        self._hash = None

    @property
    def factors(self) -> int:
        return len(self.bases)

    @classmethod
    def from_lincombs(cls, *xs: LinearCombination) -> "Tensor":
        """``x_1 ⊗ ... ⊗ x_r`` expanded by multilinearity."""
        keys = [((), 1)]
        for x in xs:
            keys = [(k + (i,), c * d) for k, c in keys for i, d in x.items()]
        return cls(tuple(x.basis for x in xs), keys)

    def __getitem__(self, key) -> int:
        return self._terms.get(tuple(tuple(i) for i in key), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def _check_compatible(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor):
            raise TypeError(f"cannot combine Tensor with {type(other).__name__}")
        if other.bases != self.bases:
            raise BasisMismatch(f"tensor bases {self.bases} vs {other.bases}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(self.bases, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Tensor":
        return self * -1

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return Tensor(self.bases, {k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.bases == other.bases and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.bases, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Tensor({self.bases!r}, {self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (key, c) in enumerate(self._terms.items()):
            body = f" {TENSOR_SIGN} ".join(
                "1" if not idx else format_index(b, idx) for b, idx in zip(self.bases, key)
            )
            parts.append(_format_coeff(c, body, i == 0))
        return "".join(parts)

    def swap(self) -> "Tensor":
        """Reverse the order of the tensor factors."""
        return Tensor(self.bases[::-1], {k[::-1]: c for k, c in self._terms.items()})

    def to_dict(self) -> dict:
        return {
            "bases": list(self.bases),
            "terms": [
                {"index": [list(i) for i in k], "coeff": str(c)} for k, c in self._terms.items()
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Tensor":
        return cls(data["bases"], [(tuple(map(tuple, t["index"])), int(t["coeff"])) for t in data["terms"]])


# --- generic plumbing ------------------------------------------------------

def add(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    return x + y


def scale(c: int, x: LinearCombination) -> LinearCombination:
    return c * x


def _as_lincomb(value, basis: str) -> LinearCombination:
    if isinstance(value, LinearCombination):
        return value
    return LinearCombination.term(basis, value)


def linear_extend(
    point_map: Callable, x: LinearCombination, basis: str | None = None
) -> LinearCombination:
    """Extend a map on basis indices linearly.

    ``point_map(index)`` may return a new index (kept in ``basis``, which
    defaults to the basis of ``x``) or a :class:`LinearCombination`.
    """
    basis = basis or x.basis
    acc: dict = defaultdict(int)
    out_basis = None
    for k, c in x.items():
        img = _as_lincomb(point_map(k), basis)
        out_basis = out_basis or img.basis
        if img.basis != out_basis:
            raise BasisMismatch("point map returned mixed bases")
        for j, d in img.items():
            acc[j] += c * d
    return LinearCombination(out_basis or basis, acc)


def bilinear_extend(
    point_map: Callable, x: LinearCombination, y: LinearCombination, basis: str | None = None
) -> LinearCombination:
    """Extend a map on pairs of basis indices bilinearly."""
    basis = basis or x.basis
    acc: dict = defaultdict(int)
    for i, c in x.items():
        for j, d in y.items():
            img = _as_lincomb(point_map(i, j), basis)
            basis = img.basis
            for k, e in img.items():
                acc[k] += c * d * e
    return LinearCombination(basis, acc)


def pairing(x: LinearCombination, y: LinearCombination) -> int:
    """Duality bracket between the F and G bases (or P and M)."""
    dual = {("F", "G"), ("G", "F"), ("P", "M"), ("M", "P")}
    if (x.basis, y.basis) not in dual:
        raise BasisMismatch(f"no duality bracket between {x.basis} and {y.basis}")
    if None not in (x.degree, y.degree) and x.degree != y.degree:
        raise DegreeMismatch(f"degree {x.degree} vs {y.degree}")
    return sum(c * y[k] for k, c in x.items())


def tensor_pairing(x: Tensor, y: Tensor) -> int:
    return sum(c * y[k] for k, c in x.items())


# --- basis changes ---------------------------------------------------------

def P_to_F(x: LinearCombination) -> LinearCombination:
    """Expand ``P^pi`` as the sum of ``F_a`` over the rearrangements ``a`` of ``pi``."""
    acc: dict = defaultdict(int)
    for pi, c in x.items():
        for a in orbit(pi):
            acc[a] += c
    return LinearCombination("F", acc, x.degree)


def F_to_P(x: LinearCombination) -> LinearCombination:
    """Regroup an F-combination into P; fails unless constant on rearrangement classes."""
    classes: dict = defaultdict(dict)
    for a, c in x.items():
        classes[sort_word(a)][a] = c
    out = {}
    for pi, members in classes.items():
        full = orbit(pi)
        coeffs = {members.get(a, 0) for a in full}
        if len(coeffs) != 1:
            missing = [a for a in full if a not in members]
            witness = missing[0] if missing else next(iter(members))
            raise NotInCatalanSpan(
                f"coefficients of F over the rearrangements of {pi} are not constant "
                f"(e.g. {format_index('F', witness)} has coefficient {members.get(witness, 0)})"
            )
        out[pi] = coeffs.pop()
    return LinearCombination("P", out, x.degree)


def change_basis(x: LinearCombination, target: str) -> LinearCombination:
    """Convert between F, P and R (the Catalan span); identity when ``target`` equals the source."""
    from .poset import P_to_R, R_to_P

    if target not in BASES:
        raise BasisMismatch(f"unknown basis {target!r}")
    if x.basis == target:
        return x
    to_P = {"P": lambda v: v, "F": F_to_P, "R": R_to_P}
    from_P = {"P": lambda v: v, "F": P_to_F, "R": P_to_R}
    if x.basis not in to_P or target not in from_P:
        raise BasisMismatch(f"no conversion from {x.basis} to {target}")
    return from_P[target](to_P[x.basis](x))
