"""Contradictory, opposite and intermediary negation: fuzzy operators, a three-valued logic and tools around them."""

from ._kernels import BACKEND
from .scoi import (
    FuzzySet,
    NegationConfig,
    UniverseMismatch,
    con_neg,
    equals,
    includes,
    int_neg,
    intersect,
    lift_negation,
    negate,
    opp_neg,
    union,
)
from .semantics import GOEDEL, LUKASIEWICZ, SemanticsConfig, entails, eval_formula, is_valid, truth_table
from .syntax import FormulaSyntaxError, expand_connegation, parse, render

__all__ = [
    "BACKEND",
    "FormulaSyntaxError",
    "FuzzySet",
    "GOEDEL",
    "NegationConfig",
    "LUKASIEWICZ",
    "SemanticsConfig",
    "UniverseMismatch",
    "con_neg",
    "entails",
    "equals",
    "eval_formula",
    "expand_connegation",
    "includes",
    "int_neg",
    "intersect",
    "is_valid",
    "lift_negation",
    "negate",
    "opp_neg",
    "parse",
    "render",
    "truth_table",
    "union",
]
__version__ = "0.1.0"
