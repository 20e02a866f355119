"""Exact Laurent polynomial ring: arithmetic, normal form, gcd, cyclotomics."""

from .poly import (
    INFINITY,
    LaurentPoly,
    divides_up_to_units,
    equal_up_to_units,
    exact_divide,
    multiplicity,
    normalize,
)
from .gcd import gcd, gcd_many
from .cyclotomic import (
    cyclotomic_factorization,
    cyclotomic_polynomial,
    euler_phi,
    is_cyclotomic_product,
)
from .textfmt import parse_poly, poly_to_str

__all__ = [
    "INFINITY",
    "LaurentPoly",
    "cyclotomic_factorization",
    "cyclotomic_polynomial",
    "divides_up_to_units",
    "equal_up_to_units",
    "euler_phi",
    "exact_divide",
    "gcd",
    "gcd_many",
    "is_cyclotomic_product",
    "multiplicity",
    "normalize",
    "parse_poly",
    "poly_to_str",
]
