"""From temporal programs to ground programs.

``tau_bounded`` instantiates a program for one fixed length.  The
point-wise route builds one module per time point; final rules get a guard
``not __q(k+1)``, and module ``k`` asserts ``__q(k)``, so a final rule is
active exactly at the last time point of the joined chain.  The
incremental driver joins module after module and re-solves at every
horizon.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .aspcore import GroundLiteral, GroundRule, LogicProgram, Module, join, stable_models
from .normalform import TemporalLiteral, TemporalProgram, TemporalRule, is_present_centered
from .semantics import Trace

__all__ = [
    "Q_BASE",
    "StampedAtom",
    "SolveReport",
    "tau_literal",
    "tau_rule",
    "tau_bounded",
    "tau_star_rule",
    "build_module",
    "module_chain",
    "incremental_solve",
    "bounded_solve",
    "decode",
    "MODES",
]

Q_BASE = "__q"
MODES = ("first", "all-at-first", "exhaustive")


@dataclass(frozen=True)
class StampedAtom:
    base: str
    stamp: int
    aux: bool = False

    def __post_init__(self):
        if self.stamp < 0:
            raise ValueError("negative time stamp")
        if (self.base == Q_BASE) != self.aux:
            raise ValueError(f"{Q_BASE!r} is reserved for the q-family")

    @classmethod
    def q(cls, k: int) -> "StampedAtom":
        return cls(Q_BASE, k, True)

    def sort_key(self):
        return (self.stamp, self.aux, self.base)

    def __str__(self):
        return f"{self.base}({self.stamp})"


def _check_alphabet(program: TemporalProgram):
    bad = sorted(a for a in program.full_alphabet if a.startswith(Q_BASE))
    if bad:
        raise ValueError(f"atom names reserved for the q-family: {bad}")


def tau_literal(k: int, l: TemporalLiteral) -> GroundLiteral:
    if l.shifted and k == 0:
        raise ValueError(f"shifted literal {l} has no instance at time 0")
    return GroundLiteral(StampedAtom(l.atom, k - 1 if l.shifted else k), l.positive)


def tau_rule(k: int, r: TemporalRule) -> GroundRule:
    return GroundRule(tuple(tau_literal(k, l) for l in r.head), tuple(tau_literal(k, l) for l in r.body))


def _stamps(alphabet, upto: int):
    return {StampedAtom(a, i) for a in alphabet for i in range(upto + 1)}


def tau_bounded(program: TemporalProgram, length: int) -> LogicProgram:
    """Initial rules at 0, dynamic rules at 1..length, final rules at length."""
    _check_alphabet(program)
    rules = [tau_rule(0, r) for r in program.initial]
    for k in range(1, length + 1):
        rules.extend(tau_rule(k, r) for r in program.dynamic)
    rules.extend(tau_rule(length, r) for r in program.final)
    seen, unique = set(), []
    for r in rules:
        if r not in seen:
            seen.add(r)
            unique.append(r)
    return LogicProgram(_stamps(program.full_alphabet, length), tuple(unique))


def tau_star_rule(k: int, r: TemporalRule) -> GroundRule:
    g = tau_rule(k, r)
    if r.kind == "final":
        g = GroundRule(g.head, g.body + (GroundLiteral(StampedAtom.q(k + 1), False),))
    return g


def build_module(program: TemporalProgram, k: int) -> Module:
    if not is_present_centered(program):
        raise ValueError("point-wise modules need a present-centered program")
    _check_alphabet(program)
    alpha = program.full_alphabet
    here = {StampedAtom(a, k) for a in alpha}
    if k == 0:
        rules = [tau_star_rule(0, r) for r in program.initial + program.final]
        return Module(LogicProgram(here | {StampedAtom.q(1)}, tuple(rules)), {StampedAtom.q(1)}, here)
    rules = [tau_star_rule(k, r) for r in program.dynamic + program.final]
    rules.append(GroundRule((GroundLiteral(StampedAtom.q(k)),), ()))
    prev = {StampedAtom(a, k - 1) for a in alpha}
    inputs = prev | {StampedAtom.q(k + 1)}
    outputs = here | {StampedAtom.q(k)}
    return Module(LogicProgram(inputs | outputs, tuple(rules)), inputs, outputs)


def module_chain(program: TemporalProgram, k: int) -> Module:
    m = build_module(program, 0)
    for i in range(1, k + 1):
        m = join(m, build_module(program, i))
    return m


def decode(model, length: int, alphabet) -> Trace:
    """Invert the stamping: ``a ∈ T_i`` iff ``a(i)`` is in the model."""
    alphabet = frozenset(alphabet)
    states = [set() for _ in range(length + 1)]
    for atom in model:
        if not atom.aux and atom.base in alphabet and atom.stamp <= length:
            states[atom.stamp].add(atom.base)
    return Trace(tuple(frozenset(s) for s in states))


@dataclass
class SolveReport:
    horizon: int
    models: list[frozenset]
    trace_models: list[Trace]
    translation: str = "pointwise"
    stats: dict = field(default_factory=dict)

    @property
    def satisfiable(self) -> bool:
        return bool(self.models)

    def projected(self, alphabet) -> list[Trace]:
        return sorted({t.restrict(alphabet) for t in self.trace_models})


def _report(models, k, program, translation, ground, started) -> SolveReport:
    traces = [decode(m, k, program.full_alphabet) for m in models]
    stats = {
        "rules": len(ground.rules),
        "atoms": len(ground.atoms),
        "models": len(models),
        "seconds": round(time.perf_counter() - started, 6),
    }
    return SolveReport(k, models, traces, translation, stats)


def bounded_solve(program: TemporalProgram, length: int, engine: str = "auto",
                  budget: int | None = None) -> SolveReport:
    started = time.perf_counter()
    ground = tau_bounded(program, length)
    models = stable_models(ground, engine=engine, budget=budget)
    return _report(models, length, program, "bounded", ground, started)


def incremental_solve(program: TemporalProgram, lmin: int = 0, lmax: int = 10, mode: str = "first",
                      engine: str = "auto", budget: int | None = None) -> list[SolveReport]:
    """Join module ``k`` onto the chain for ``k = 0..lmax`` and solve from ``lmin`` on.

    ``first`` stops at the first horizon with a model and keeps one model;
    ``all-at-first`` keeps all models of that horizon; ``exhaustive``
    reports every horizon up to ``lmax``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if lmin > lmax:
        raise ValueError("lmin exceeds lmax")
    if not is_present_centered(program):
        raise ValueError("incremental solving needs a present-centered program")
    reports = []
    chain = None
    for k in range(lmax + 1):
        started = time.perf_counter()
        m = build_module(program, k)
        chain = m if chain is None else join(chain, m)
        if k < lmin:
            continue
        models = stable_models(chain, engine=engine, budget=budget)
        if mode == "first":
            models = models[:1]
        reports.append(_report(models, k, program, "pointwise", chain.program, started))
        if models and mode != "exhaustive":
            break
    return reports
