"""Exact arithmetic substrate: rationals, polynomials, series, linear algebra."""
from .linalg import exact_rank, express_in_basis, in_span, nullspace, rref
from .poly import Monomial, MultiPoly, TermOrder
from .rational import Rational, format_rational, parse_rational
from .univariate import RatFun, UniPoly, series_expand, substitute_t_over_1mt

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "Monomial",
    "MultiPoly",
    "TermOrder",
    "UniPoly",
    "RatFun",
    "series_expand",
    "substitute_t_over_1mt",
    "exact_rank",
    "rref",
    "nullspace",
    "in_span",
    "express_in_basis",
]
