"""Temporal equilibrium logic on finite traces."""

__version__ = "0.1.0"

from .aspcore import GroundRule, LogicProgram, Module, join, stable_models
from .equilibrium import is_equilibrium, tel_models, tht_models
from .errors import BudgetExceeded, NotCompositional
from .normalform import (
    ReductionError,
    TemporalLiteral,
    TemporalProgram,
    TemporalRule,
    compile_theory,
    reduce_past_future,
    to_normal_form,
)
from .semantics import HTTrace, Trace, sat, sat_ltl
from .syntax import ParseError, Theory, parse_formula, parse_theory, print_formula
from .translate import build_module, incremental_solve, tau_bounded

__all__ = [
    "BudgetExceeded",
    "GroundRule",
    "HTTrace",
    "LogicProgram",
    "Module",
    "NotCompositional",
    "ParseError",
    "ReductionError",
    "TemporalLiteral",
    "TemporalProgram",
    "TemporalRule",
    "Theory",
    "Trace",
    "build_module",
    "compile_theory",
    "incremental_solve",
    "is_equilibrium",
    "join",
    "parse_formula",
    "parse_theory",
    "print_formula",
    "reduce_past_future",
    "sat",
    "sat_ltl",
    "stable_models",
    "tau_bounded",
    "tel_models",
    "tht_models",
    "to_normal_form",
]
