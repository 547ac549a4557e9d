"""Hopf algebra of parking functions, its Catalan subalgebra and the internal product."""

from .errors import (
    BasisMismatch,
    DegreeMismatch,
    InvalidWord,
    NotInCatalanSpan,
    PQSymError,
    ResourceBoundExceeded,
)
from .lincomb import LinearCombination, Tensor, change_basis, pairing
from .words import (
    enumerate_ndpf,
    enumerate_parking,
    enumerate_prime,
    evaluation,
    is_parking,
    park,
    parkize,
    standardize,
)
from .algebra import coproduct, internal_coproduct, internal_product, internal_product_F, product
from .catalan import J, certify, project_to_sym
from .expr import evaluate, parse

__all__ = [
    "BasisMismatch",
    "DegreeMismatch",
    "InvalidWord",
    "NotInCatalanSpan",
    "PQSymError",
    "ResourceBoundExceeded",
    "LinearCombination",
    "Tensor",
    "change_basis",
    "pairing",
    "enumerate_ndpf",
    "enumerate_parking",
    "enumerate_prime",
    "evaluation",
    "is_parking",
    "park",
    "parkize",
    "standardize",
    "coproduct",
    "internal_coproduct",
    "internal_product",
    "internal_product_F",
    "product",
    "J",
    "certify",
    "project_to_sym",
    "evaluate",
    "parse",
]
