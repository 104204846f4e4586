"""Exact solvers for ordering compositions of monotone affine and
piecewise-linear functions."""

from .errors import (
    BadDistribution,
    BadInput,
    CompOrderError,
    ContractViolation,
    IdentityFunction,
    InvalidK,
    NonMonotone,
    NotEvenSum,
    ParseError,
    TooLarge,
    Unsupported,
    ZeroDenominator,
)
from .functions import IDENTITY, AffineFn, ClampedFn, MonotonePwlFn, delta, gamma, hull, reflect
from .numeric import NEG_INF, POS_INF, ExtReal, Rational, format_rational, parse_rational, to_rational
from .oracle import brute_exact_k, brute_partial, brute_total
from .ordering import Verdict, lex_sort, precedes_affine, precedes_hull
from .solvers import (
    Instance,
    Mode,
    Objective,
    Solution,
    fold,
    rotation_values,
    solve,
    solve_exact_k,
    solve_min,
    solve_partial_clamped,
    solve_partial_linear,
    solve_total_linear,
)

__all__ = [
    "AffineFn",
    "BadDistribution",
    "BadInput",
    "ClampedFn",
    "CompOrderError",
    "ContractViolation",
    "ExtReal",
    "IDENTITY",
    "IdentityFunction",
    "Instance",
    "InvalidK",
    "Mode",
    "MonotonePwlFn",
    "NEG_INF",
    "NonMonotone",
    "NotEvenSum",
    "Objective",
    "POS_INF",
    "ParseError",
    "Rational",
    "Solution",
    "TooLarge",
    "Unsupported",
    "Verdict",
    "ZeroDenominator",
    "brute_exact_k",
    "brute_partial",
    "brute_total",
    "delta",
    "fold",
    "format_rational",
    "gamma",
    "hull",
    "lex_sort",
    "parse_rational",
    "precedes_affine",
    "precedes_hull",
    "reflect",
    "rotation_values",
    "solve",
    "solve_exact_k",
    "solve_min",
    "solve_partial_clamped",
    "solve_partial_linear",
    "solve_total_linear",
    "to_rational",
]
