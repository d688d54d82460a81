"""Exact arithmetic: integer polynomials, factored forms, symmetric functions, series."""

from .forms import (
    FactoredWeightedSum, LinearForm, Var, assignment_from_lists,
    evaluate_factored, parse_rational, x, y,
)
from .poly import ONE, T, ZERO, IntPolynomial, interpolate
from .series import BivariateSeries, series_product_egf
from .symfun import (
    MBasisExpansion, PBasisExpansion, canonical, monomial_symmetric,
    specialize_m, specialize_p,
)

__all__ = [
    "IntPolynomial", "T", "ONE", "ZERO", "interpolate",
    "Var", "x", "y", "LinearForm", "FactoredWeightedSum", "evaluate_factored",
    "assignment_from_lists", "parse_rational",
    "PBasisExpansion", "MBasisExpansion", "canonical",
    "specialize_p", "specialize_m", "monomial_symmetric",
    "BivariateSeries", "series_product_egf",
]
