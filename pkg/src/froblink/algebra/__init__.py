"""Polynomial rings over F_p, Groebner bases and ideal operations.

Copyright (C) 2025 froblink contributors. Released under the terms in the LICENSE file.
"""

from .ffpoly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Poly,
    PolynomialRing,
    PrimeField,
    elimination_order,
    format_poly,
    poly_add,
    poly_frobenius_pow,
    poly_in_bracket_max,
    poly_mul,
)
from .groebner import GroebnerBasis, normal_form
from .ideal import (
    Ideal,
    groebner,
    ideal_colon,
    ideal_contains,
    ideal_dimension,
    ideal_equal,
    ideal_height,
    ideal_intersect,
    ideal_member,
)
from .params import Budgets

__all__ = [
    "GREVLEX",
    "LEX",
    "Budgets",
    "GroebnerBasis",
    "Ideal",
    "MonomialOrder",
    "Poly",
    "PolynomialRing",
    "PrimeField",
    "elimination_order",
    "format_poly",
    "groebner",
    "ideal_colon",
    "ideal_contains",
    "ideal_dimension",
    "ideal_equal",
    "ideal_height",
    "ideal_intersect",
    "ideal_member",
    "normal_form",
    "poly_add",
    "poly_frobenius_pow",
    "poly_in_bracket_max",
    "poly_mul",
]
