"""Exact arithmetic over Q(q): Laurent polynomials, rational functions, matrices."""

from .laurent import LaurentPoly, format_laurent, parse_laurent
from .ratfunc import RatFunc, parse_ratfunc
from .matrix import (
    ExactMatrix,
    char_poly,
    column_space,
    evaluate_at,
    kernel,
    kernel_sparse,
    poly_eval,
    poly_eval_matrix,
    rref,
)

q = RatFunc.coerce(LaurentPoly({1: 1}))
qinv = RatFunc.coerce(LaurentPoly({-1: 1}))

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "ExactMatrix",
    "format_laurent",
    "parse_laurent",
    "parse_ratfunc",
    "rref",
    "kernel",
    "kernel_sparse",
    "column_space",
    "char_poly",
    "poly_eval",
    "poly_eval_matrix",
    "evaluate_at",
    "q",
    "qinv",
]
