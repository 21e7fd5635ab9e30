"""Exact string coproduct/cobracket computations on 3-dimensional lens spaces."""

from ._core import (
    bialgebra_check,
    classify,
    cobracket_k,
    cobracket_pi,
    coproduct,
    coproduct_text,
    correction,
    counts,
    counts_coproduct,
    dennis_dlog,
    homology_groups,
    invert_unit,
    search,
    torsion_unit,
    transform_check,
    DomainError,
    InvalidTorsionExpression,
    LensstringError,
    NotInvertibleError,
)

__all__ = [
    "bialgebra_check",
    "classify",
    "cobracket_k",
    "cobracket_pi",
    "coproduct",
    "coproduct_text",
    "correction",
    "counts",
    "counts_coproduct",
    "dennis_dlog",
    "homology_groups",
    "invert_unit",
    "search",
    "torsion_unit",
    "transform_check",
    "DomainError",
    "InvalidTorsionExpression",
    "LensstringError",
    "NotInvertibleError",
]

__version__ = "0.1.0"
