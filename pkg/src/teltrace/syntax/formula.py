"""Temporal formula AST.

Every connective of the past/future temporal language is a small frozen
dataclass.  Nullary connectives (``Bot``, ``Top``, ``Initial``, ``Final``)
compare equal across instances; module-level singletons are provided for
convenience.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Formula",
    "Atom",
    "Bot",
    "Top",
    "Initial",
    "Final",
    "Neg",
    "Prev",
    "WPrev",
    "Next",
    "WNext",
    "AlwaysBefore",
    "EvBefore",
    "AlwaysAfter",
    "EvAfter",
    "And",
    "Or",
    "Impl",
    "Iff",
    "Since",
    "Trigger",
    "Until",
    "Release",
    "BOT",
    "TOP",
    "INITIAL",
    "FINAL",
    "PRIMITIVE_KINDS",
    "PAST_KINDS",
    "FUTURE_KINDS",
    "TEMPORAL_UNARY",
    "rebuild",
    "subformulas",
    "atoms",
    "depth",
    "conj",
    "disj",
    "flatten",
    "has_implication",
    "desugar",
    "Theory",
]


class Formula:
    """Base class of all temporal formulas."""

    __slots__ = ()

    arity = 0

    @property
    def children(self) -> tuple["Formula", ...]:
        return ()

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __invert__(self) -> "Formula":
        return Neg(self)

    def __rshift__(self, other: "Formula") -> "Formula":
        return Impl(self, other)

    def __str__(self) -> str:
        from .printer import print_formula

        return print_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("atom name must be nonempty")

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True)
class _Nullary(Formula):
    def __repr__(self):
        return type(self).__name__ + "()"


class Bot(_Nullary):
    pass


class Top(_Nullary):
    pass


class Initial(_Nullary):
    pass


class Final(_Nullary):
    pass


@dataclass(frozen=True)
class _Unary(Formula):
    arg: Formula

    arity = 1

    @property
    def children(self):
        return (self.arg,)


class Neg(_Unary):
    pass


class Prev(_Unary):
    pass


class WPrev(_Unary):
    pass


class Next(_Unary):
    pass


class WNext(_Unary):
    pass


class AlwaysBefore(_Unary):
    pass


class EvBefore(_Unary):
    pass


class AlwaysAfter(_Unary):
    pass


class EvAfter(_Unary):
    pass


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula

    arity = 2

    @property
    def children(self):
        return (self.left, self.right)


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Impl(_Binary):
    pass


class Iff(_Binary):
    pass


class Since(_Binary):
    pass


class Trigger(_Binary):
    pass


class Until(_Binary):
    pass


class Release(_Binary):
    pass


BOT = Bot()
TOP = Top()
INITIAL = Initial()
FINAL = Final()

PRIMITIVE_KINDS = (Atom, Bot, And, Or, Impl, Prev, Since, Trigger, Next, Until, Release)
PAST_KINDS = (Prev, WPrev, Since, Trigger, AlwaysBefore, EvBefore, Initial)
FUTURE_KINDS = (Next, WNext, Until, Release, AlwaysAfter, EvAfter, Final)
TEMPORAL_UNARY = (Prev, WPrev, Next, WNext, AlwaysBefore, EvBefore, AlwaysAfter, EvAfter)


def rebuild(f: Formula, children: Iterable[Formula]) -> Formula:
    """Return a node of the same kind as ``f`` with new children."""
    children = tuple(children)
    if isinstance(f, _Unary):
        return type(f)(*children)
    if isinstance(f, _Binary):
        return type(f)(*children)
    return f


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield all subformulas of ``f`` in post-order (duplicates included)."""
    stack = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded or not node.children:
            yield node
            continue
        stack.append((node, True))
        for child in reversed(node.children):
            stack.append((child, False))


def atoms(*formulas: Formula) -> frozenset[str]:
    """Names of all atoms occurring in the given formulas."""
    return frozenset(
        g.name for f in formulas for g in subformulas(f) if isinstance(g, Atom)
    )


def depth(f: Formula) -> int:
    if not f.children:
        return 0
    return 1 + max(depth(c) for c in f.children)


def conj(formulas: Iterable[Formula]) -> Formula:
    """Left-folded conjunction; the empty conjunction is ``Top``."""
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return TOP if result is None else result


def disj(formulas: Iterable[Formula]) -> Formula:
    """Left-folded disjunction; the empty disjunction is ``Bot``."""
    result = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return BOT if result is None else result


def flatten(f: Formula, kind: type) -> list[Formula]:
    """Operands of a nested ``kind`` chain (``And`` or ``Or``), left to right."""
    if isinstance(f, kind):
        return flatten(f.left, kind) + flatten(f.right, kind)
    return [f]


def has_implication(f: Formula) -> bool:
    return any(isinstance(g, (Impl, Iff, Neg)) for g in subformulas(f))


_DESUGAR_TOP = Impl(BOT, BOT)


def desugar(f: Formula) -> Formula:
    """Expand derived connectives into the primitive grammar.

    The result only contains ``Atom``, ``Bot``, ``And``, ``Or``, ``Impl``,
    ``Prev``, ``Since``, ``Trigger``, ``Next``, ``Until`` and ``Release``.
    """
    memo: dict[int, Formula] = {}

    def go(g: Formula) -> Formula:
        key = id(g)
        if key in memo:
            return memo[key]
        kids = [go(c) for c in g.children]
        match g:
            case Top():
                out = _DESUGAR_TOP
            case Neg():
                out = Impl(kids[0], BOT)
            case Iff():
                out = And(Impl(kids[0], kids[1]), Impl(kids[1], kids[0]))
            case AlwaysBefore():
                out = Trigger(BOT, kids[0])
            case EvBefore():
                out = Since(_DESUGAR_TOP, kids[0])
            case Initial():
                out = Impl(Prev(_DESUGAR_TOP), BOT)
            case WPrev():
                out = Or(Prev(kids[0]), Impl(Prev(_DESUGAR_TOP), BOT))
            case AlwaysAfter():
                out = Release(BOT, kids[0])
            case EvAfter():
                out = Until(_DESUGAR_TOP, kids[0])
            case Final():
                out = Impl(Next(_DESUGAR_TOP), BOT)
            case WNext():
                out = Or(Next(kids[0]), Impl(Next(_DESUGAR_TOP), BOT))
            case _:
                out = rebuild(g, kids)
        memo[key] = out
        return out

    return go(f)


@dataclass(frozen=True)
class Theory:
    """An ordered list of formulas over an explicit alphabet.

    The alphabet may be strictly larger than the set of atoms mentioned in
    the formulas; it is what model enumeration ranges over.
    """

    alphabet: frozenset[str]
    formulas: tuple[Formula, ...]

    def __post_init__(self):
        missing = atoms(*self.formulas) - self.alphabet
        if missing:
            raise ValueError(f"atoms outside the alphabet: {sorted(missing)}")

    @classmethod
    def of(cls, formulas: Iterable[Formula], alphabet: Iterable[str] | None = None) -> "Theory":
        formulas = tuple(formulas)
        alpha = atoms(*formulas)
        if alphabet is not None:
            alpha = alpha | frozenset(alphabet)
        return cls(alpha, formulas)

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self):
        return len(self.formulas)

    def extend(self, formulas: Iterable[Formula]) -> "Theory":
        return Theory.of(self.formulas + tuple(formulas), self.alphabet)
