"""Exact arithmetic substrate: rationals, polynomials, rational functions,
factorization, determinants and precision-tagged reals."""
from equiareal.algebra.factor import (
    Factorization,
    FactorizationError,
    PolyFactorization,
    factor_integer,
    factor_quartic,
    factor_rational,
    is_probable_prime,
    squarefree_divisors,
)
from equiareal.algebra.matrix import IMatrix, det
from equiareal.algebra.mpoly import MPoly
from equiareal.algebra.ratfunc import PoleError, RatFunc
from equiareal.algebra.rational import (
    Rational,
    as_rational,
    is_perfect_square,
    rational_root,
    rational_str,
)
from equiareal.algebra.real import DEFAULT_PRECISION, Real, make_context
from equiareal.algebra.upoly import UPoly, exact_quotient, poly_gcd

__all__ = [
    "DEFAULT_PRECISION",
    "Factorization",
    "FactorizationError",
    "IMatrix",
    "MPoly",
    "PoleError",
    "PolyFactorization",
    "RatFunc",
    "Rational",
    "Real",
    "UPoly",
    "as_rational",
    "det",
    "exact_quotient",
    "factor_integer",
    "factor_quartic",
    "factor_rational",
    "is_perfect_square",
    "is_probable_prime",
    "make_context",
    "poly_gcd",
    "rational_root",
    "rational_str",
    "squarefree_divisors",
]
