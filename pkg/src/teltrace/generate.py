"""Seeded random formulas, traces and programs for property checks."""

from __future__ import annotations

import random

from .normalform import TemporalLiteral, TemporalProgram, TemporalRule
from .semantics import HTTrace, Trace
from .syntax.formula import (
    BOT,
    FINAL,
    INITIAL,
    TOP,
    AlwaysAfter,
    AlwaysBefore,
    And,
    Atom,
    EvAfter,
    EvBefore,
    Formula,
    Iff,
    Impl,
    Neg,
    Next,
    Or,
    Prev,
    Release,
    Since,
    Trigger,
    Until,
    WNext,
    WPrev,
)

UNARY = (Neg, Prev, WPrev, Next, WNext, AlwaysBefore, EvBefore, AlwaysAfter, EvAfter)
BINARY = (And, Or, Impl, Iff, Since, Trigger, Until, Release)
PRIMITIVE_UNARY = (Prev, Next)
PRIMITIVE_BINARY = (And, Or, Impl, Since, Trigger, Until, Release)
# implication-free connectives, closed under the Boolean dual
DUAL_UNARY = (Prev, WPrev, Next, WNext, AlwaysBefore, EvBefore, AlwaysAfter, EvAfter)
DUAL_BINARY = (And, Or, Since, Trigger, Until, Release)


def rng_of(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_formula(rng, atoms=("a", "b"), depth: int = 3, unary=UNARY, binary=BINARY,
                   constants=True, leaf_prob: float = 0.25) -> Formula:
    atoms = list(atoms)
    leaves = [Atom(a) for a in atoms] * 2
    if constants:
        leaves += [TOP, BOT, INITIAL, FINAL]

    def go(d):
        if d == 0 or rng.random() < leaf_prob:
            return rng.choice(leaves)
        if unary and (not binary or rng.random() < 0.4):
            return rng.choice(unary)(go(d - 1))
        return rng.choice(binary)(go(d - 1), go(d - 1))

    return go(depth)


def implication_free_formula(rng, atoms=("a", "b"), depth: int = 3) -> Formula:
    atoms = list(atoms)
    leaves = [Atom(a) for a in atoms] * 2 + [TOP, BOT]

    def go(d):
        if d == 0 or rng.random() < 0.25:
            return rng.choice(leaves)
        if rng.random() < 0.4:
            return rng.choice(DUAL_UNARY)(go(d - 1))
        return rng.choice(DUAL_BINARY)(go(d - 1), go(d - 1))

    return go(depth)


def random_theory(rng, atoms=("a", "b"), depth: int = 3, max_formulas: int = 2) -> list[Formula]:
    return [random_formula(rng, atoms, depth) for _ in range(rng.randint(1, max_formulas))]


def random_trace(rng, atoms=("a", "b"), length: int = 2) -> Trace:
    atoms = sorted(atoms)
    return Trace(tuple(frozenset(a for a in atoms if rng.random() < 0.5) for _ in range(length + 1)))


def random_httrace(rng, atoms=("a", "b"), length: int = 2) -> HTTrace:
    there = random_trace(rng, atoms, length)
    here = Trace(tuple(frozenset(a for a in s if rng.random() < 0.5) for s in there))
    return HTTrace(here, there)


def random_literal(rng, atoms, shifted_ok: bool) -> TemporalLiteral:
    return TemporalLiteral(rng.choice(sorted(atoms)), rng.random() < 0.6, shifted_ok and rng.random() < 0.4)


def random_rule(rng, atoms=("a", "b"), present_centered: bool = False) -> TemporalRule:
    kind = rng.choice(("initial", "dynamic", "dynamic", "final"))
    shifted_ok = kind == "dynamic"
    body = tuple(random_literal(rng, atoms, shifted_ok) for _ in range(rng.randint(0, 2)))
    head = tuple(random_literal(rng, atoms, shifted_ok and not present_centered) for _ in range(rng.randint(0, 2)))
    return TemporalRule(kind, body, head)


def random_program(rng, atoms=("a", "b"), max_rules: int = 3, present_centered: bool = False) -> TemporalProgram:
    rules = [random_rule(rng, atoms, present_centered) for _ in range(rng.randint(1, max_rules))]
    return TemporalProgram(frozenset(atoms), frozenset(), tuple(rules))


def _past(rng, atoms, depth):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice([Atom(a) for a in atoms] + [Neg(Atom(atoms[0])), INITIAL, TOP])
    kind = rng.randrange(8)
    if kind == 0:
        return And(_past(rng, atoms, depth - 1), _past(rng, atoms, depth - 1))
    if kind == 1:
        return Or(_past(rng, atoms, depth - 1), _past(rng, atoms, depth - 1))
    if kind == 2:
        return Neg(_past(rng, atoms, depth - 1))
    if kind == 3:
        return rng.choice((Since, Trigger))(_past(rng, atoms, depth - 1), _past(rng, atoms, depth - 1))
    return rng.choice((Prev, WPrev, AlwaysBefore, EvBefore))(_past(rng, atoms, depth - 1))


def _future(rng, atoms, depth):
    # no eventualities or disjunctions between future formulas
    if depth == 0 or rng.random() < 0.3:
        return rng.choice([Atom(a) for a in atoms] + [Neg(Atom(atoms[-1])), BOT])
    kind = rng.randrange(5)
    if kind == 0:
        return And(_future(rng, atoms, depth - 1), _future(rng, atoms, depth - 1))
    if kind == 1:
        return Or(Atom(rng.choice(atoms)), Atom(rng.choice(atoms)))
    return rng.choice((Next, WNext, AlwaysAfter))(_future(rng, atoms, depth - 1))


def random_past_future_rule(rng, atoms=("a", "b"), depth: int = 2) -> Formula:
    atoms = sorted(atoms)
    r = Impl(_past(rng, atoms, depth), _future(rng, atoms, depth))
    wrap = rng.randrange(3)
    if wrap == 1:
        return AlwaysAfter(r)
    if wrap == 2:
        return WNext(AlwaysAfter(r))
    return r
