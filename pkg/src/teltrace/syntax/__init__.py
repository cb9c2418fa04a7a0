from .formula import *  # noqa: F401,F403
from .formula import (
    Formula,
    Theory,
    atoms,
    conj,
    desugar,
    disj,
    flatten,
    subformulas,
)
from .parser import ParseError, parse_formula, parse_theory, wrap_program_context
from .printer import print_formula

__all__ = [
    "Formula",
    "Theory",
    "ParseError",
    "atoms",
    "conj",
    "desugar",
    "disj",
    "flatten",
    "parse_formula",
    "parse_theory",
    "print_formula",
    "subformulas",
    "wrap_program_context",
]
