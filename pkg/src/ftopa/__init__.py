"""Finite totally ordered probability algebras and inference over them."""
from ftopa.algebra import (Algebra, AlgebraError, AlgebraSpec, enumerate_algebras,
                           idempotents_of, make_algebra)
from ftopa.ranges import (DomainError, PRange, format_belief, parse_belief, range_inverse,
                          range_product, range_solve)

__all__ = [
    "Algebra", "AlgebraError", "AlgebraSpec", "DomainError", "PRange",
    "enumerate_algebras", "format_belief", "idempotents_of", "make_algebra",
    "parse_belief", "range_inverse", "range_product", "range_solve",
]
