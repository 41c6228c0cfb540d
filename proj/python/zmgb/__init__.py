"""Groebner bases of vanishing ideals over Z/m.

Thin re-export of the compiled core: basis construction, reduced normal
forms, polynomial-function counting and functional equivalence checking.
"""

from ._core import (
    GroebnerBasis,
    Modulus,
    MonomialOrder,
    Polynomial,
    Ring,
    build_basis,
    build_p,
    coefficient_bound,
    count_polynomial_functions,
    deserialize_basis,
    divides_mod,
    factorial_valuation,
    functionally_equal,
    gcd,
    in_S,
    is_reduced,
    is_vanishing,
    nabla,
    partial_difference,
    rec_comp,
    reduced_nf,
    serialize_basis,
    smarandache,
)

__all__ = [
    "GroebnerBasis",
    "Modulus",
    "MonomialOrder",
    "Polynomial",
    "Ring",
    "build_basis",
    "build_p",
    "coefficient_bound",
    "count_polynomial_functions",
    "deserialize_basis",
    "divides_mod",
    "factorial_valuation",
    "functionally_equal",
    "gcd",
    "in_S",
    "is_reduced",
    "is_vanishing",
    "nabla",
    "partial_difference",
    "rec_comp",
    "reduced_nf",
    "serialize_basis",
    "smarandache",
]
