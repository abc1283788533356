"""Exact polynomial arithmetic: sparse rational polynomials over the two
variable universes used throughout the package (the coordinate ring of m
plane vectors, and the free polynomial ring on the rho/pi symbols), exact
linear algebra over their monomial bases, and a small Gröbner engine."""

from .rings import (
    Monomial,
    Polynomial,
    VariableUniverse,
    compositions,
    parse_polynomial,
    rhopi_universe,
    xy_universe,
)
from .linalg import (
    PolynomialSpace,
    RowSpace,
    columns_for,
    linear_relations,
    nullspace_combinations,
    row_from_polynomial,
    scaled_row_from_polynomial,
    sorted_monomials,
    span_dimension,
)
from .groebner import (
    MonomialOrder,
    buchberger,
    leading_term,
    normal_form,
    s_polynomial,
    staircase_generating_function,
    staircase_monomials,
)

__all__ = [
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "PolynomialSpace",
    "RowSpace",
    "VariableUniverse",
    "buchberger",
    "columns_for",
    "compositions",
    "leading_term",
    "linear_relations",
    "normal_form",
    "nullspace_combinations",
    "parse_polynomial",
    "rhopi_universe",
    "row_from_polynomial",
    "s_polynomial",
    "scaled_row_from_polynomial",
    "sorted_monomials",
    "span_dimension",
    "staircase_generating_function",
    "staircase_monomials",
    "xy_universe",
]
