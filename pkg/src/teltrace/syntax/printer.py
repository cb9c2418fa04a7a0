"""Round-trippable ASCII printer for temporal formulas."""

from __future__ import annotations

from .formula import (
    AlwaysAfter,
    AlwaysBefore,
    And,
    Atom,
    Bot,
    EvAfter,
    EvBefore,
    Final,
    Formula,
    Iff,
    Impl,
    Initial,
    Neg,
    Next,
    Or,
    Prev,
    Release,
    Since,
    Top,
    Trigger,
    Until,
    WNext,
    WPrev,
    _Binary,
    _Unary,
)

__all__ = ["print_formula", "SPELLING"]

SPELLING = {
    Bot: "#false",
    Top: "#true",
    Initial: "#initial",
    Final: "#final",
    Neg: "~",
    Prev: "#previous",
    WPrev: "#previous^",
    Next: "#next",
    WNext: "#next^",
    AlwaysAfter: "#always+",
    AlwaysBefore: "#always-",
    EvAfter: "#eventually+",
    EvBefore: "#eventually-",
    And: "&",
    Or: "|",
    Impl: "->",
    Iff: "<->",
    Since: "#since",
    Trigger: "#trigger",
    Until: "#until",
    Release: "#release",
}

# (precedence, right-associative)
_BINARY_PREC = {
    Impl: (1, True),
    Iff: (1, True),
    Or: (2, False),
    And: (3, False),
    Since: (4, True),
    Trigger: (4, True),
    Until: (4, True),
    Release: (4, True),
}
_UNARY_PREC = 5


def _prec(f: Formula) -> int:
    if isinstance(f, _Binary):
        return _BINARY_PREC[type(f)][0]
    if isinstance(f, _Unary):
        return _UNARY_PREC
    return 6


def print_formula(f: Formula) -> str:
    """Render ``f`` with minimal parentheses.

    Temporal unary applications that are operands of a binary connective are
    parenthesized anyway, e.g. ``(#previous a) -> b``; this is cosmetic and
    parses back to the same tree.
    """
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, _Binary):
        p, right_assoc = _BINARY_PREC[type(f)]
        left = _operand(f.left, p, strict=right_assoc)
        right = _operand(f.right, p, strict=not right_assoc)
        return f"{left} {SPELLING[type(f)]} {right}"
    if isinstance(f, _Unary):
        inner = print_formula(f.arg)
        if isinstance(f.arg, _Binary):
            inner = f"({inner})"
        if isinstance(f, Neg):
            return "~" + inner
        return f"{SPELLING[type(f)]} {inner}"
    return SPELLING[type(f)]


def _operand(g: Formula, p: int, strict: bool) -> str:
    text = print_formula(g)
    q = _prec(g)
    if q < p or (strict and q == p):
        return f"({text})"
    if isinstance(g, _Unary) and not isinstance(g, Neg):
        return f"({text})"
    return text
