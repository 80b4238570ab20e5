"""Exact polynomial arithmetic and Groebner-basis machinery."""

from .groebner import GroebnerLimitExceeded, Limits, normal_form, reduced_groebner
from .ideal import (
    DEFAULT_KMAX,
    Ideal,
    height_oracle,
    ideal_equal,
    ideal_intersection,
    ideal_membership,
    initial_ideal,
    monomial_dimension,
    power_membership,
    radical_membership,
)
from .monomial import Monomial
from .order import MonomialOrder
from .polynomial import Polynomial, aux_variable, binomial_f, minor, variable
from .ring import RingMismatchError, RingSpec
from .textfmt import PolynomialSyntaxError, format_polynomial, parse_polynomial

__all__ = [
    "DEFAULT_KMAX",
    "GroebnerLimitExceeded",
    "Ideal",
    "Limits",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "PolynomialSyntaxError",
    "RingMismatchError",
    "RingSpec",
    "aux_variable",
    "binomial_f",
    "format_polynomial",
    "height_oracle",
    "ideal_equal",
    "ideal_intersection",
    "ideal_membership",
    "initial_ideal",
    "minor",
    "monomial_dimension",
    "normal_form",
    "parse_polynomial",
    "power_membership",
    "radical_membership",
    "reduced_groebner",
    "variable",
]
