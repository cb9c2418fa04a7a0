"""Ground logic programs, modules and their stable models.

Atoms are any hashable values with a readable ``str``; the translations use
``translate.StampedAtom``.  A rule ``h1 | ... | hm :- b1, ..., bn`` is read
as the propositional formula ``b1 & ... & bn -> h1 | ... | hm`` in which
``not a`` is negation, so stable models are the equilibrium models of the
rule set over a single state.  Head negation and disjunction need no special
treatment.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable

from .errors import NotCompositional, budget_bits, check_budget

__all__ = [
    "GroundLiteral",
    "GroundRule",
    "LogicProgram",
    "Module",
    "CompositionCheck",
    "stable_models",
    "is_model",
    "compositional",
    "join",
    "strongly_connected_components",
    "positive_dependency_graph",
    "emit_text",
]


def atom_key(a) -> tuple:
    key = getattr(a, "sort_key", None)
    if key is not None:
        return (1,) + tuple(key())
    return (0, str(a))


def atomset_key(s) -> tuple:
    return (len(s), tuple(sorted(atom_key(a) for a in s)))


@dataclass(frozen=True)
class GroundLiteral:
    atom: Hashable
    positive: bool = True

    def __str__(self):
        return str(self.atom) if self.positive else f"not {self.atom}"

    def negate(self) -> "GroundLiteral":
        return GroundLiteral(self.atom, not self.positive)


def pos(a) -> GroundLiteral:
    return GroundLiteral(a, True)


def neg(a) -> GroundLiteral:
    return GroundLiteral(a, False)


def _lits(items) -> tuple[GroundLiteral, ...]:
    return tuple(l if isinstance(l, GroundLiteral) else GroundLiteral(l) for l in items)


@dataclass(frozen=True)
class GroundRule:
    """``head`` is a disjunction, ``body`` a conjunction; an empty head is ⊥."""

    head: tuple[GroundLiteral, ...] = ()
    body: tuple[GroundLiteral, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "head", _lits(self.head))
        object.__setattr__(self, "body", _lits(self.body))

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_fact(self) -> bool:
        return not self.body and len(self.head) == 1 and self.head[0].positive

    def atoms(self) -> set:
        return {l.atom for l in self.head + self.body}

    def head_atoms(self) -> set:
        return {l.atom for l in self.head if l.positive}

    def text(self) -> str:
        head = " | ".join(str(l) for l in self.head)
        body = ", ".join(str(l) for l in self.body)
        if not self.head:
            return f":- {body or '#true'}."
        if not self.body:
            return f"{head}."
        return f"{head} :- {body}."

    def __str__(self):
        return self.text()

    def holds(self, here, there) -> bool:
        """HT satisfaction of the rule at ``⟨here, there⟩`` (both sets)."""

        def val(l, world):
            return (l.atom in world) if l.positive else (l.atom not in there)

        if all(val(l, there) for l in self.body) and not any(val(l, there) for l in self.head):
            return False
        if here is there:
            return True
        return not all(val(l, here) for l in self.body) or any(val(l, here) for l in self.head)


@dataclass(frozen=True)
class LogicProgram:
    atoms: frozenset
    rules: tuple[GroundRule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "atoms", frozenset(self.atoms))
        object.__setattr__(self, "rules", tuple(self.rules))
        for r in self.rules:
            stray = r.atoms() - self.atoms
            if stray:
                raise ValueError(f"rule {r} uses atoms outside the program: {sorted(map(str, stray))}")

    @classmethod
    def of(cls, rules: Iterable[GroundRule], atoms: Iterable = ()) -> "LogicProgram":
        rules = tuple(rules)
        alpha = set(atoms)
        for r in rules:
            alpha |= r.atoms()
        return cls(frozenset(alpha), rules)

    def head_atoms(self) -> set:
        return set().union(*(r.head_atoms() for r in self.rules)) if self.rules else set()

    def union(self, other: "LogicProgram") -> "LogicProgram":
        seen = set(self.rules)
        return LogicProgram(self.atoms | other.atoms, self.rules + tuple(r for r in other.rules if r not in seen))

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


@dataclass(frozen=True)
class Module:
    """A program with input and output signatures."""

    program: LogicProgram
    inputs: frozenset = frozenset()
    outputs: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "inputs", frozenset(self.inputs))
        object.__setattr__(self, "outputs", frozenset(self.outputs))
        if self.inputs & self.outputs:
            raise ValueError("module inputs and outputs overlap")
        if not self.program.atoms <= self.inputs | self.outputs:
            stray = self.program.atoms - self.inputs - self.outputs
            raise ValueError(f"module atoms outside I ∪ O: {sorted(map(str, stray))}")
        heads = {l.atom for r in self.program.rules for l in r.head}
        if not heads <= self.outputs:
            raise ValueError(f"module heads outside O: {sorted(map(str, heads - self.outputs))}")

    @classmethod
    def empty(cls) -> "Module":
        return cls(LogicProgram(frozenset()))

    @classmethod
    def of(cls, rules: Iterable[GroundRule], inputs=(), outputs=()) -> "Module":
        inputs, outputs = frozenset(inputs), frozenset(outputs)
        return cls(LogicProgram.of(rules, inputs | outputs), inputs, outputs)

    @property
    def atoms(self) -> frozenset:
        return self.inputs | self.outputs


# stable models --------------------------------------------------------------

ENGINES = ("auto", "brute", "search")
# above this many candidate atoms ``auto`` prefers the SAT search
AUTO_BRUTE_LIMIT = 10


def is_model(x, program) -> bool:
    program = program.program if isinstance(program, Module) else program
    x = frozenset(x)
    return all(r.holds(x, x) for r in program.rules)


def _brute(program: LogicProgram, candidates: list) -> list[frozenset]:
    out = []
    rules = program.rules
    for n in range(len(candidates) + 1):
        for combo in combinations(candidates, n):
            x = frozenset(combo)
            if not all(r.holds(x, x) for r in rules):
                continue
            minimal = True
            for m in range(n):
                for sub in combinations(combo, m):
                    y = frozenset(sub)
                    if all(r.holds(y, x) for r in rules):
                        minimal = False
                        break
                if not minimal:
                    break
            if minimal:
                out.append(x)
    return out


def _search(program: LogicProgram) -> list[frozenset]:
    from .htsearch import equilibrium_search
    from .syntax.formula import Atom, Impl, Neg, conj, disj

    names = {a: f"v{i}" for i, a in enumerate(sorted(program.atoms, key=atom_key))}
    back = {v: a for a, v in names.items()}

    def lf(l):
        f = Atom(names[l.atom])
        return f if l.positive else Neg(f)

    formulas = [Impl(conj(lf(l) for l in r.body), disj(lf(l) for l in r.head)) for r in program.rules]
    return [frozenset(back[v] for v in t[0]) for t in equilibrium_search(formulas, 0)]


def stable_models(program, engine: str = "auto", budget: int | None = None) -> list[frozenset]:
    """Stable models as frozensets, sorted by size and then by atom order.

    Only atoms occurring positively in some head can be true in a stable
    model, so the brute-force engine enumerates subsets of those.  Inputs of
    a module have no rules and are therefore false.  ``auto`` switches to
    the SAT search for larger candidate sets.
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
    program = program.program if isinstance(program, Module) else program
    candidates = sorted(program.head_atoms(), key=atom_key)
    if engine == "auto":
        engine = "brute" if len(candidates) <= min(AUTO_BRUTE_LIMIT, budget_bits(budget)) else "search"
    if engine == "brute":
        check_budget(len(candidates), budget, "stable model enumeration")
        found = _brute(program, candidates)
    else:
        found = _search(program)
    return sorted(found, key=atomset_key)


# modules ------------------------------------------------------------------


def positive_dependency_graph(program: LogicProgram) -> dict:
    """Edges from each positive head atom to the positive body atoms of its rules."""
    graph: dict = {a: set() for a in program.atoms}
    for r in program.rules:
        body = [l.atom for l in r.body if l.positive]
        for h in r.head_atoms():
            graph[h].update(body)
    return graph


def strongly_connected_components(graph: dict) -> list[frozenset]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    out: list[frozenset] = []
    counter = 0
    for root in sorted(graph, key=atom_key):
        if root in index:
            continue
        work = [(root, iter(sorted(graph.get(root, ()), key=atom_key)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(sorted(graph.get(nxt, ()), key=atom_key))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = set()
                while True:
                    v = stack.pop()
                    on_stack.discard(v)
                    comp.add(v)
                    if v == node:
                        break
                out.append(frozenset(comp))
    return out


@dataclass(frozen=True)
class CompositionCheck:
    ok: bool
    component: frozenset = frozenset()
    reason: str = ""

    def __bool__(self):
        return self.ok


def compositional(m1: Module, m2: Module) -> CompositionCheck:
    shared = m1.outputs & m2.outputs
    if shared:
        return CompositionCheck(False, shared, "output signatures overlap")
    united = LogicProgram(m1.program.atoms | m2.program.atoms, m1.program.rules + m2.program.rules)
    for comp in strongly_connected_components(positive_dependency_graph(united)):
        if comp & m1.outputs and comp & m2.outputs:
            return CompositionCheck(False, comp, "positive recursion across the modules")
    return CompositionCheck(True)


def join(m1: Module, m2: Module) -> Module:
    check = compositional(m1, m2)
    if not check:
        names = ", ".join(sorted(map(str, check.component), key=str))
        raise NotCompositional(f"cannot join modules: {check.reason} ({{{names}}})", check.component)
    return Module(
        m1.program.union(m2.program),
        (m1.inputs - m2.outputs) | (m2.inputs - m1.outputs),
        m1.outputs | m2.outputs,
    )


# text ---------------------------------------------------------------------


def emit_text(program, header: dict | None = None) -> str:
    """Rule-per-line text; ``header`` entries become leading ``%`` comments."""
    program = program.program if isinstance(program, Module) else program
    lines = []
    if header is not None:
        lines.append("% teltrace ground program")
        for key, value in header.items():
            if isinstance(value, (set, frozenset, list, tuple)):
                value = " ".join(sorted(map(str, value)))
            lines.append(f"% {key}: {value}")
    lines.extend(r.text() for r in program.rules)
    return "\n".join(lines) + "\n"
