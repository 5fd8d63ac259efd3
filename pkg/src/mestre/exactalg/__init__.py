"""Exact arithmetic over Q, Q[t], Q(t) and quadratic extensions."""

from fractions import Fraction

from .intfactor import (
    FactoredInt,
    FactorizationError,
    factor_integer,
    is_probable_prime,
    valuation,
)
from .modp import irreducibility_witness, is_irreducible_mod
from .poly import (
    Poly,
    as_rat,
    integer_nth_root,
    nth_root_poly,
    poly_discriminant,
    poly_gcd,
    rational_nth_root,
    rational_roots,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)
from .quadext import QuadExt
from .ratfunc import RatFunc, as_ratfunc, is_nth_power_up_to_constant, nth_root_ratfunc

Rat = Fraction


def rat_to_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


__all__ = [
    "FactoredInt",
    "FactorizationError",
    "Fraction",
    "Poly",
    "QuadExt",
    "Rat",
    "RatFunc",
    "as_rat",
    "as_ratfunc",
    "factor_integer",
    "integer_nth_root",
    "irreducibility_witness",
    "is_irreducible_mod",
    "is_nth_power_up_to_constant",
    "is_probable_prime",
    "nth_root_poly",
    "nth_root_ratfunc",
    "poly_discriminant",
    "poly_gcd",
    "rat_from_str",
    "rat_to_str",
    "rational_nth_root",
    "rational_roots",
    "resultant",
    "squarefree_decomposition",
    "squarefree_part",
    "valuation",
]
