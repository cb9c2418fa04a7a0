"""Temporal logic programs and compilation of formulas into them.

A temporal program consists of initial rules ``B -> H``, dynamic rules
``#next^ #always+ (B -> H)`` and final rules ``#always+ (#final -> (B -> H))``
whose bodies and heads are temporal literals ``a``, ``~a``, ``'a`` and
``~'a``.

Compilation recognizes rule-shaped formulas directly and labels every
other subformula with a fresh atom.  How much of a label's definition is
emitted depends on where the label is used:

* used only in bodies, or only under negation: the sufficient conditions
  (``ψ -> x``) suffice, because minimality keeps ``x`` no larger than ``ψ``;
* used positively in a head: in exact mode both directions are emitted; in
  obligation mode (past-future reduction) only ``x -> ψ``, so that future
  operators turn into obligations carried forward in time.

Defining a future label exactly needs a shifted head literal, so the exact
compiler may return programs that are not present-centered.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .syntax.formula import (
    BOT,
    FINAL,
    TOP,
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
    Theory,
    Top,
    Trigger,
    Until,
    WNext,
    WPrev,
    atoms,
    conj,
    disj,
    flatten,
    rebuild,
    subformulas,
)

__all__ = [
    "AUX_PREFIX",
    "TemporalLiteral",
    "TemporalRule",
    "TemporalProgram",
    "BCLaw",
    "ReductionError",
    "to_normal_form",
    "reduce_past_future",
    "compile_theory",
    "is_present_centered",
    "is_past_future_rule",
    "reduction_is_exact",
    "from_bc_law",
    "parse_bc_laws",
    "lint",
]

AUX_PREFIX = "__nf_"
RULE_KINDS = ("initial", "dynamic", "final")


@dataclass(frozen=True, order=True)
class TemporalLiteral:
    """One of ``a``, ``¬a``, ``●a``, ``¬●a``."""

    atom: str
    positive: bool = True
    shifted: bool = False

    def negate(self) -> "TemporalLiteral":
        return TemporalLiteral(self.atom, not self.positive, self.shifted)

    def to_formula(self) -> Formula:
        f: Formula = Atom(self.atom)
        if self.shifted:
            f = Prev(f)
        return f if self.positive else Neg(f)

    def __str__(self):
        text = ("'" if self.shifted else "") + self.atom
        return text if self.positive else "not " + text


def lit(atom: str, positive: bool = True, shifted: bool = False) -> TemporalLiteral:
    return TemporalLiteral(atom, positive, shifted)


@dataclass(frozen=True)
class TemporalRule:
    kind: str
    body: tuple[TemporalLiteral, ...] = ()
    head: tuple[TemporalLiteral, ...] = ()

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown rule kind {self.kind!r}")
        object.__setattr__(self, "body", tuple(self.body))
        object.__setattr__(self, "head", tuple(self.head))
        if self.kind != "dynamic" and any(l.shifted for l in self.body + self.head):
            raise ValueError(f"{self.kind} rules admit only unshifted literals")

    @property
    def present_centered(self) -> bool:
        return not any(l.shifted for l in self.head)

    def atoms(self) -> frozenset[str]:
        return frozenset(l.atom for l in self.body + self.head)

    def implication(self) -> Formula:
        return Impl(conj(l.to_formula() for l in self.body), disj(l.to_formula() for l in self.head))

    def to_formula(self) -> Formula:
        r = self.implication()
        if self.kind == "initial":
            return r
        if self.kind == "dynamic":
            return WNext(AlwaysAfter(r))
        return AlwaysAfter(Impl(FINAL, r))

    def text(self) -> str:
        """Surface syntax of the rule without its ``#program`` directive."""
        head = " ; ".join(str(l) for l in self.head)
        body = ", ".join(str(l) for l in self.body)
        if not self.head:
            return f":- {body or '#true'}."
        if not self.body:
            return f"{head}."
        return f"{head} :- {body}."

    def __str__(self):
        return f"[{self.kind}] {self.text()}"


@dataclass(frozen=True)
class TemporalProgram:
    alphabet: frozenset[str]
    aux_alphabet: frozenset[str]
    rules: tuple[TemporalRule, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "aux_alphabet", frozenset(self.aux_alphabet))
        object.__setattr__(self, "rules", tuple(self.rules))
        if self.alphabet & self.aux_alphabet:
            raise ValueError("auxiliary atoms overlap the alphabet")
        used = frozenset().union(*(r.atoms() for r in self.rules)) if self.rules else frozenset()
        missing = used - self.alphabet - self.aux_alphabet
        if missing:
            raise ValueError(f"rule atoms outside the alphabet: {sorted(missing)}")

    @classmethod
    def of(cls, rules: Iterable[TemporalRule], alphabet=None, aux=()) -> "TemporalProgram":
        rules = tuple(rules)
        used = frozenset(l.atom for r in rules for l in r.body + r.head)
        aux = frozenset(aux)
        alpha = (used - aux) if alphabet is None else frozenset(alphabet) | (used - aux)
        return cls(alpha, aux, rules)

    def _kind(self, kind):
        return [r for r in self.rules if r.kind == kind]

    @property
    def initial(self) -> list[TemporalRule]:
        return self._kind("initial")

    @property
    def dynamic(self) -> list[TemporalRule]:
        return self._kind("dynamic")

    @property
    def final(self) -> list[TemporalRule]:
        return self._kind("final")

    @property
    def full_alphabet(self) -> frozenset[str]:
        return self.alphabet | self.aux_alphabet

    def to_theory(self) -> Theory:
        return Theory.of([r.to_formula() for r in self.rules], self.full_alphabet)

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def union(self, other: "TemporalProgram") -> "TemporalProgram":
        return TemporalProgram(
            self.alphabet | other.alphabet,
            self.aux_alphabet | other.aux_alphabet,
            self.rules + tuple(r for r in other.rules if r not in self.rules),
        )

    def text(self) -> str:
        """Surface syntax, grouped into initial, dynamic and final sections."""
        lines = [r.text() for r in self.initial]
        for kind in ("dynamic", "final"):
            rules = self._kind(kind)
            if rules:
                lines.append(f"#program {kind}.")
                lines.extend(r.text() for r in rules)
        return "\n".join(lines) + ("\n" if lines else "")


def is_present_centered(program) -> bool:
    rules = program.rules if isinstance(program, TemporalProgram) else program
    return all(r.present_centered for r in rules)


# compilation ---------------------------------------------------------------


class ReductionError(ValueError):
    """The formula is outside the fragment a reduction accepts."""


@dataclass(frozen=True)
class _Weak:
    # ●̂ of an atom; becomes ⊤ in initial rules and ●a in dynamic ones
    atom: str


@dataclass
class _Label:
    key: tuple
    name: str
    uses: set = field(default_factory=set)
    generated: frozenset | None = None
    rules: list = field(default_factory=list)
    children: list = field(default_factory=list)


_TEMPORAL_RECURSIVE = (Until, Release, Since, Trigger, AlwaysAfter, EvAfter, AlwaysBefore, EvBefore)


def _expand(f: Formula) -> Formula:
    """Remove ``<->`` and read ``φ -> ⊥`` as negation."""
    kids = [_expand(c) for c in f.children]
    if isinstance(f, Iff):
        return And(Impl(kids[0], kids[1]), Impl(kids[1], kids[0]))
    if isinstance(f, Impl) and isinstance(kids[1], Bot):
        return Neg(kids[0])
    return rebuild(f, kids)


def _unfold(f: Formula, x: Atom) -> Formula:
    """One-step fixpoint unfolding of a temporal operator with ``x`` for ``f``."""
    if isinstance(f, Until):
        return Or(f.right, And(f.left, Next(x)))
    if isinstance(f, Release):
        return And(f.right, Or(f.left, WNext(x)))
    if isinstance(f, Since):
        return Or(f.right, And(f.left, Prev(x)))
    if isinstance(f, Trigger):
        return And(f.right, Or(f.left, WPrev(x)))
    if isinstance(f, AlwaysAfter):
        return And(f.arg, WNext(x))
    if isinstance(f, EvAfter):
        return Or(f.arg, Next(x))
    if isinstance(f, AlwaysBefore):
        return And(f.arg, WPrev(x))
    if isinstance(f, EvBefore):
        return Or(f.arg, Prev(x))
    return f


class _Compiler:
    def __init__(self, alphabet: frozenset[str]):
        self.alphabet = frozenset(alphabet)
        self.labels: dict[tuple, _Label] = {}
        self.by_name: dict[str, _Label] = {}
        self.order: list[_Label] = []
        self.user_rules: list = []
        self.roots: list[_Label] = []
        self._sink: list | None = None
        self._owner: _Label | None = None

    # labels -------------------------------------------------------------

    def label(self, f: Formula, mode: str, use: str) -> str:
        key = (f, mode)
        lab = self.labels.get(key)
        if lab is None:
            lab = _Label(key, f"{AUX_PREFIX}tmp{len(self.order)}")
            self.labels[key] = lab
            self.by_name[lab.name] = lab
            self.order.append(lab)
        lab.uses.add(use)
        self._link(lab)
        return lab.name

    def _link(self, lab: _Label):
        if self._owner is None:
            if lab not in self.roots:
                self.roots.append(lab)
        elif lab not in self._owner.children:
            self._owner.children.append(lab)

    def _touch(self, name: str, use: str):
        lab = self.by_name.get(name)
        if lab is not None:
            lab.uses.add(use)
            self._link(lab)

    # literal forms ------------------------------------------------------

    def unshifted(self, f: Formula, mode: str, use: str):
        """An unshifted positive literal (or constant) equivalent to ``f``."""
        if isinstance(f, Atom):
            self._touch(f.name, use)
            return lit(f.name)
        if isinstance(f, Top):
            return True
        if isinstance(f, Bot):
            return False
        return lit(self.label(f, mode, use))

    def poslit(self, f: Formula, mode: str, use: str):
        """A positive literal (possibly shifted) or constant equivalent to ``f``."""
        if isinstance(f, Prev):
            u = self.unshifted(f.arg, mode, use)
            if u is False:
                return False
            if u is not True:
                return lit(u.atom, shifted=True)
        elif isinstance(f, (Atom, Top, Bot)):
            return self.unshifted(f, mode, use)
        return lit(self.label(f, mode, use))

    def negated(self, f: Formula, mode: str):
        p = self.poslit(f, mode, "neg")
        if isinstance(p, bool):
            return not p
        return p.negate()

    def body_item(self, f: Formula, mode: str) -> list:
        if isinstance(f, And):
            return [l for g in flatten(f, And) for l in self.body_item(g, mode)]
        if isinstance(f, Neg):
            return [self.negated(f.arg, mode)]
        if isinstance(f, WPrev):
            u = self.unshifted(f.arg, mode, "body")
            if isinstance(u, bool):
                return [True] if u else [lit(self.label(f, mode, "body"))]
            return [_Weak(u.atom)]
        return [self.poslit(f, mode, "body")]

    def head_item(self, f: Formula, mode: str) -> list:
        if isinstance(f, Or):
            return [l for g in flatten(f, Or) for l in self.head_item(g, mode)]
        if isinstance(f, Neg):
            return [self.negated(f.arg, mode)]
        if isinstance(f, (Atom, Top, Bot)):
            return [self.unshifted(f, mode, "head")]
        if isinstance(f, Prev) and mode == "exact":
            return [self.poslit(f, mode, "head")]
        if isinstance(f, EvAfter) and mode == "obligation":
            u = self.unshifted(f.arg, mode, "head")
            if isinstance(u, bool):
                return [u]
            return [u, lit(self.label(f, mode, "head"))]
        return [lit(self.label(f, mode, "head"))]

    def body_of(self, items: Iterable[Formula], mode: str) -> list:
        return [l for g in items for l in self.body_item(g, mode)]

    def head_of(self, items: Iterable[Formula], mode: str) -> list:
        return [l for g in items for l in self.head_item(g, mode)]

    # emission -----------------------------------------------------------

    def emit(self, ctx: str, body: list, head: list):
        sink = self.user_rules if self._sink is None else self._sink
        if ctx == "always":
            self.emit("initial", body, head)
            self.emit("dynamic", body, head)
            return
        if ctx == "final" and any(
            isinstance(l, _Weak) or (isinstance(l, TemporalLiteral) and l.shifted) for l in body + head
        ):
            # final rule mentioning the previous state: guard by a label for F
            xf = lit(self.label(FINAL, "exact", "body"))
            self.emit("initial", body + [xf], head)
            self.emit("dynamic", body + [xf], head)
            return
        out_body, out_head = [], []
        for l in body:
            l = _specialize(l, ctx)
            if l is False:
                return
            if l is True or l in out_body:
                continue
            out_body.append(l)
        for l in head:
            l = _specialize(l, ctx)
            if l is True:
                return
            if l is False or l in out_head:
                continue
            out_head.append(l)
        rule = TemporalRule(ctx, tuple(out_body), tuple(out_head))
        if rule not in sink:
            sink.append(rule)

    # formulas -----------------------------------------------------------

    def add(self, f: Formula, mode: str, ctx: str = "initial"):
        for ctx2, body, head in rule_parts(_expand(f), ctx):
            self.rule(ctx2, body, head, mode)

    def rule(self, ctx: str, body: list[Formula], head: list[Formula], mode: str):
        self.emit(ctx, self.body_of(body, mode), self.head_of(head, mode))

    # definitions --------------------------------------------------------

    def define(self, lab: _Label):
        f, mode = lab.key
        x = lit(lab.name)
        uses = lab.uses
        if mode == "exact":
            need_if, need_only = True, "head" in uses
        else:
            need_if, need_only = bool(uses & {"body", "neg"}), "head" in uses
        self._sink, self._owner = [], lab
        try:
            self._define(f, mode, x, need_if, need_only)
            lab.rules = self._sink
        finally:
            self._sink, self._owner = None, None

    def _define(self, f, mode, x, need_if, need_only):
        emit = self.emit
        if isinstance(f, EvAfter) and mode == "obligation":
            # pending obligation, carried while the goal has not happened
            u = self.unshifted(f.arg, mode, "head")
            if isinstance(u, bool):
                emit("always", [x], [u])
                return
            prev_u = lit(u.atom, shifted=True)
            emit("dynamic", [lit(x.atom, shifted=True), prev_u.negate()], [u, x])
            emit("final", [x], [u])
            return
        if isinstance(f, _TEMPORAL_RECURSIVE):
            f = _unfold(f, Atom(x.atom))
        if isinstance(f, And):
            items = flatten(f, And)
            if need_if:
                emit("always", self.body_of(items, mode), [x])
            if need_only:
                for g in items:
                    emit("always", [x], self.head_of([g], mode))
        elif isinstance(f, Or):
            items = flatten(f, Or)
            if need_if:
                for g in items:
                    emit("always", self.body_of([g], mode), [x])
            if need_only:
                emit("always", [x], self.head_of(items, mode))
        elif isinstance(f, Impl):
            y, z = f.left, f.right
            if need_if:
                emit("always", [self.negated(y, mode)], [x])
                emit("always", self.body_of([z], mode), [x])
                emit("always", [], self.head_of([y], mode) + [self.negated(z, mode), x])
            if need_only:
                emit("always", [x] + self.body_of([y], mode), self.head_of([z], mode))
        elif isinstance(f, Neg):
            if need_if:
                emit("always", [self.negated(f.arg, mode)], [x])
            if need_only:
                emit("always", [x] + self.body_of([f.arg], mode), [])
        elif isinstance(f, Prev):
            if need_if:
                emit("dynamic", [self._shift(self.unshifted(f.arg, mode, "body"))], [x])
            if need_only:
                emit("initial", [x], [])
                emit("dynamic", [x], [self._shift(self.unshifted(f.arg, mode, "head"))])
        elif isinstance(f, WPrev):
            if need_if:
                emit("initial", [], [x])
                emit("dynamic", [self._shift(self.unshifted(f.arg, mode, "body"))], [x])
            if need_only:
                emit("dynamic", [x], [self._shift(self.unshifted(f.arg, mode, "head"))])
        elif isinstance(f, (Next, WNext)):
            xs = lit(x.atom, shifted=True)
            if need_if:
                emit("dynamic", [self.unshifted(f.arg, mode, "body")], [xs])
                if isinstance(f, WNext):
                    emit("final", [], [x])
            if need_only:
                emit("dynamic", [xs], [self.unshifted(f.arg, mode, "head")])
                if isinstance(f, Next):
                    emit("final", [x], [])
        elif isinstance(f, Initial):
            if need_if:
                emit("initial", [], [x])
            if need_only:
                emit("dynamic", [x], [])
        elif isinstance(f, Final):
            if need_if:
                emit("final", [], [x])
            if need_only:
                emit("dynamic", [lit(x.atom, shifted=True)], [])
        else:
            raise TypeError(f"cannot label {f!r}")

    @staticmethod
    def _shift(u):
        # ●u inside a dynamic rule; ●⊤ holds at every k ≥ 1
        if isinstance(u, bool):
            return u
        return lit(u.atom, shifted=True)

    def close(self):
        while True:
            pending = [lab for lab in self.order if lab.generated != frozenset(lab.uses)]
            if not pending:
                break
            for lab in pending:
                lab.generated = frozenset(lab.uses)
                self.define(lab)

    def program(self) -> TemporalProgram:
        self.close()
        # post-order numbering over the label dependency graph
        numbering: dict[str, str] = {}
        seen: set[int] = set()

        def visit(lab: _Label):
            stack = [(lab, iter(lab.children))]
            seen.add(id(lab))
            while stack:
                node, it = stack[-1]
                child = next((c for c in it if id(c) not in seen), None)
                if child is None:
                    stack.pop()
                    numbering[node.name] = f"{AUX_PREFIX}{len(numbering) + 1}"
                else:
                    seen.add(id(child))
                    stack.append((child, iter(child.children)))

        for lab in self.roots + self.order:
            if id(lab) not in seen:
                visit(lab)

        def rename(l: TemporalLiteral) -> TemporalLiteral:
            name = numbering.get(l.atom)
            return l if name is None else TemporalLiteral(name, l.positive, l.shifted)

        rules: list[TemporalRule] = []
        for r in self.user_rules + [r for lab in sorted(self.order, key=lambda l: numbering[l.name])
                                    for r in lab.rules]:
            r2 = TemporalRule(r.kind, tuple(map(rename, r.body)), tuple(map(rename, r.head)))
            if r2 not in rules:
                rules.append(r2)
        return TemporalProgram(self.alphabet, frozenset(numbering.values()), tuple(rules))


def _specialize(l, ctx: str):
    if isinstance(l, bool):
        return l
    if isinstance(l, _Weak):
        return True if ctx == "initial" else lit(l.atom, shifted=True)
    if l.shifted and ctx == "initial":
        # ●a is false at the initial time point
        return not l.positive
    return l


# rule recognition ----------------------------------------------------------


def rule_parts(f: Formula, ctx: str = "initial") -> Iterator[tuple[str, list, list]]:
    """Split a formula into ``(context, body items, head items)`` triples.

    ``context`` is ``initial``, ``dynamic``, ``final`` or ``always``; the
    formula is the conjunction of the triples read as rules in context.
    """
    if isinstance(f, And):
        yield from rule_parts(f.left, ctx)
        yield from rule_parts(f.right, ctx)
        return
    if isinstance(f, Top):
        return
    if isinstance(f, AlwaysAfter):
        if ctx in ("initial", "always"):
            yield from rule_parts(f.arg, "always")
            return
        if ctx in ("dynamic", "final"):
            yield from rule_parts(f.arg, ctx)
            return
    if isinstance(f, WNext) and isinstance(f.arg, AlwaysAfter):
        if ctx == "final":
            return
        yield from rule_parts(f.arg.arg, "dynamic")
        return
    body: list[Formula] = []
    head = f
    while True:
        if isinstance(head, Impl):
            body.extend(flatten(head.left, And))
            head = head.right
        elif isinstance(head, Neg):
            body.extend(flatten(head.arg, And))
            head = BOT
        else:
            break
    heads = flatten(head, Or)
    if any(isinstance(h, Top) for h in heads):
        return
    heads = [h for h in heads if not isinstance(h, Bot)]
    items = []
    for b in body:
        if isinstance(b, Top):
            continue
        if isinstance(b, Bot):
            return
        items.append(b)
    if ctx == "always":
        if any(isinstance(b, Initial) for b in items):
            ctx = "initial"
        elif any(isinstance(b, Final) for b in items):
            ctx = "final"
    if ctx == "final" and any(isinstance(b, Initial) for b in items) and any(isinstance(b, Final) for b in items):
        pass
    if ctx == "initial":
        items = [b for b in items if not isinstance(b, Initial)]
    elif ctx == "final":
        items = [b for b in items if not isinstance(b, Final)]
    elif ctx == "dynamic" and any(isinstance(b, Initial) for b in items):
        return
    yield ctx, items, heads


def compile_theory(theory, reduce: bool = True) -> TemporalProgram:
    """Compile every formula; past-future rules use the obligation encoding.

    With ``reduce=False`` this is exactly ``to_normal_form``.
    """
    formulas, alpha = _theory_parts(theory)
    c = _Compiler(alpha)
    for f in formulas:
        g = _expand(f)
        c.add(g, "obligation" if reduce and is_past_future_rule(g) else "exact")
    return c.program()


def _theory_parts(theory):
    if isinstance(theory, Theory):
        return list(theory.formulas), theory.alphabet
    if isinstance(theory, Formula):
        return [theory], atoms(theory)
    formulas = list(theory)
    return formulas, atoms(*formulas)


def to_normal_form(theory) -> TemporalProgram:
    """A temporal program whose stable models, restricted to the original
    alphabet, are those of the theory."""
    return compile_theory(theory, reduce=False)


# past-future rules ----------------------------------------------------------

_FUTURE = (Next, WNext, Until, Release, AlwaysAfter, EvAfter, Final)
_PAST = (Prev, WPrev, Since, Trigger, AlwaysBefore, EvBefore, Initial)

_NAMES = {
    Next: "#next", WNext: "#next^", Until: "#until", Release: "#release",
    AlwaysAfter: "#always+", EvAfter: "#eventually+", Final: "#final",
    Prev: "#previous", WPrev: "#previous^", Since: "#since", Trigger: "#trigger",
    AlwaysBefore: "#always-", EvBefore: "#eventually-", Initial: "#initial",
    Impl: "->", Iff: "<->",
}


def _violations(f: Formula) -> list[str]:
    problems = []
    for ctx, body, heads in rule_parts(_expand(f)):
        for i, b in enumerate(body, 1):
            for g in subformulas(b):
                if isinstance(g, _FUTURE) or isinstance(g, (Impl, Iff)):
                    problems.append(f"body element {i} of the {ctx} rule contains {_NAMES[type(g)]}")
        for i, h in enumerate(heads, 1):
            for g in subformulas(h):
                if isinstance(g, _PAST) or isinstance(g, (Impl, Iff)):
                    problems.append(f"head element {i} of the {ctx} rule contains {_NAMES[type(g)]}")
                elif isinstance(g, Neg) and any(isinstance(s, _FUTURE) for s in subformulas(g.arg)):
                    problems.append(f"head element {i} of the {ctx} rule negates a future formula")
    return problems


def is_past_future_rule(f: Formula) -> bool:
    return not _violations(f)


def _plain(f: Formula) -> bool:
    # encoded as a literal of the rule itself, never as an obligation atom
    if isinstance(f, (Atom, Top, Bot)):
        return True
    return isinstance(f, Neg) and not any(isinstance(g, _FUTURE) for g in subformulas(f.arg))


def _choice_free(f: Formula) -> bool:
    for g in subformulas(f):
        if isinstance(g, (EvAfter, Until, Release)):
            return False
        if isinstance(g, Or) and not all(_plain(h) for h in flatten(g, Or)):
            return False
    return True


def reduction_is_exact(rule) -> bool:
    """Sufficient syntactic condition for ``reduce_past_future`` to be exact.

    Obligation atoms are one-way: an obligation never has to be taken when
    the formula it stands for happens to hold anyway.  That is harmless
    unless an obligation atom competes with another head disjunct, which
    happens for eventualities, until, release and disjunctions mixing
    future formulas with other alternatives.
    """
    if isinstance(rule, TemporalRule):
        return True
    for _, _, heads in rule_parts(_expand(rule)):
        if len(heads) > 1 and not all(_plain(h) for h in heads):
            return False
        if not all(_choice_free(h) for h in heads):
            return False
    return True


def reduce_past_future(rule, alphabet=None) -> TemporalProgram:
    """Present-centered program for a past-future rule.

    Past subformulas of the body become history atoms defined by least
    fixpoint recurrences; future subformulas of the head become obligation
    atoms that are carried forward and must be discharged by the end.
    """
    if isinstance(rule, TemporalRule):
        base = atoms(rule.to_formula())
        return TemporalProgram(base | frozenset(alphabet or ()), frozenset(), (rule,))
    problems = _violations(rule)
    if problems:
        raise ReductionError("not a past-future rule: " + "; ".join(problems))
    c = _Compiler(atoms(rule) | frozenset(alphabet or ()))
    c.add(rule, "obligation")
    prog = c.program()
    if not is_present_centered(prog):
        raise ReductionError("reduction produced a shifted head literal")
    return prog


# BC action laws --------------------------------------------------------------


@dataclass(frozen=True)
class BCLaw:
    kind: str  # "static" (if) or "dynamic" (after)
    head: str
    conditions: tuple[str, ...] = ()
    consistency: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ("static", "dynamic"):
            raise ValueError(f"unknown BC law kind {self.kind!r}")
        object.__setattr__(self, "conditions", tuple(self.conditions))
        object.__setattr__(self, "consistency", tuple(self.consistency))

    def __str__(self):
        word = "if" if self.kind == "static" else "after"
        text = f"{self.head} {word} {','.join(self.conditions)}".rstrip()
        if self.consistency:
            text += " ifcons " + ",".join(self.consistency)
        return text + "."


def from_bc_law(law: BCLaw) -> list[TemporalRule]:
    head = (lit(law.head),) + tuple(lit(c, positive=False) for c in law.consistency)
    if law.kind == "static":
        body = tuple(lit(b) for b in law.conditions)
        return [TemporalRule("dynamic", body, head), TemporalRule("initial", body, head)]
    body = tuple(lit(b, shifted=True) for b in law.conditions)
    return [TemporalRule("dynamic", body, head)]


_BC_RE = re.compile(
    r"^\s*(?P<head>[a-z][A-Za-z0-9_]*)\s+(?P<kind>if|after)\b(?P<cond>.*?)"
    r"(?:\bifcons\b(?P<cons>.*?))?\.\s*$"
)
_NAME_RE = re.compile(r"^[a-z][A-Za-z0-9_]*$")


def _names(text: str | None, lineno: int) -> tuple[str, ...]:
    if text is None or not text.strip():
        return ()
    names = tuple(n.strip() for n in text.split(","))
    for n in names:
        if not _NAME_RE.match(n):
            raise ValueError(f"line {lineno}: bad atom {n!r} in BC law")
    return names


def parse_bc_laws(text: str) -> list[BCLaw]:
    """One law per line: ``a if b1,...,bm ifcons c1,...,cn.`` or ``a after ...``."""
    laws = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        m = _BC_RE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: expected 'a if ...' or 'a after ...'")
        kind = "static" if m.group("kind") == "if" else "dynamic"
        laws.append(BCLaw(kind, m.group("head"), _names(m.group("cond"), lineno), _names(m.group("cons"), lineno)))
    return laws


def lint(program: TemporalProgram) -> list[str]:
    """Warnings for legal but unusual rules."""
    out = []
    for i, r in enumerate(program.rules, 1):
        if r.kind == "dynamic" and any(not l.positive for l in r.head if l.atom in program.alphabet):
            out.append(f"rule {i}: negated literal in the head of a dynamic rule: {r.text()}")
        if not r.present_centered:
            out.append(f"rule {i}: shifted literal in the head (not present-centered): {r.text()}")
    return out
