"""
Positive monoid: rewriting classes and brute-force positive expressions.
"""

from braid_service.monoid.expressions import nf_exponent_sum, positive_expressions
from braid_service.monoid.rewriting import (
    PositiveVerdict,
    RewriteClass,
    RewriteStep,
    Verdict,
    pos_equiv,
    rewrite_class,
    single_rewrites,
)

__all__ = [
    "PositiveVerdict",
    "RewriteClass",
    "RewriteStep",
    "Verdict",
    "nf_exponent_sum",
    "pos_equiv",
    "positive_expressions",
    "rewrite_class",
    "single_rewrites",
]
