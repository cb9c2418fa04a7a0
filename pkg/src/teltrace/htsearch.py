"""SAT-backed search for temporal equilibrium models at a fixed length.

At a fixed length THT satisfaction is propositional HT satisfaction over
time-stamped atoms, so the temporal connectives are unrolled into
conjunctions and disjunctions of stamped subformulas.  Equilibrium models
are then found by a two-solver counterexample-guided loop: the outer solver
proposes total models ``T``; the inner solver looks for a strictly smaller
``H`` with ``⟨H,T⟩`` a model.  A witness ``H`` rules out every candidate it
also refutes, not just the current one.

This is the scalable route of the oracle; the brute-force enumerator in
``equilibrium`` remains the reference and the two are cross-checked.
"""

from __future__ import annotations

from typing import Callable, Iterable

from pysat.solvers import Solver

from .semantics import Trace
from .syntax.formula import (
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
    atoms,
)

__all__ = ["Circuit", "equilibrium_search", "is_equilibrium_search"]

SOLVER_NAME = "g4"


class Circuit:
    """Structurally hashed AND/OR gates with constant folding over one solver."""

    def __init__(self, solver_name: str = SOLVER_NAME):
        self.solver = Solver(name=solver_name)
        self.nvars = 0
        self._gates: dict = {}
        self.inconsistent = False

    def fresh(self) -> int:
        self.nvars += 1
        return self.nvars

    def clause(self, lits):
        if self.inconsistent:
            return
        out = []
        for l in lits:
            if l is True:
                return
            if l is False:
                continue
            out.append(l)
        if not out:
            self.inconsistent = True
        else:
            self.solver.add_clause(out)

    def assert_(self, l):
        self.clause([l])

    def and_(self, lits):
        seen = set()
        for l in lits:
            if l is False:
                return False
            if l is True:
                continue
            if -l in seen:
                return False
            seen.add(l)
        if not seen:
            return True
        if len(seen) == 1:
            return next(iter(seen))
        key = tuple(sorted(seen))
        g = self._gates.get(key)
        if g is None:
            g = self.fresh()
            for l in key:
                self.solver.add_clause([-g, l])
            self.solver.add_clause([g] + [-l for l in key])
            self._gates[key] = g
        return g

    def or_(self, lits):
        return neg(self.and_([neg(l) for l in lits]))

    def solve(self, assumptions=()):
        if self.inconsistent:
            return False
        return self.solver.solve(assumptions=list(assumptions))

    def model(self) -> set[int]:
        return {l for l in self.solver.get_model() if l > 0}

    def close(self):
        self.solver.delete()


def neg(l):
    if l is True:
        return False
    if l is False:
        return True
    return -l


class Encoder:
    """Literal for ``f`` at time point ``k`` in one world of a fixed-length trace.

    ``atom_lit`` gives the literal of a stamped atom in this world.  For the
    here-world ``there`` is the encoder of the there-world, consulted at every
    implication; the there-world itself is classical.
    """

    def __init__(self, circuit: Circuit, n: int, atom_lit: Callable, there: "Encoder | None" = None):
        self.c = circuit
        self.n = n
        self.atom_lit = atom_lit
        self.there = there
        self._memo: dict = {}

    def lit(self, f: Formula, k: int):
        key = (id(f), k)
        hit = self._memo.get(key)
        if hit is not None and hit[0] is f:
            return hit[1]
        v = self._enc(f, k)
        self._memo[key] = (f, v)
        return v

    def _enc(self, f: Formula, k: int):
        c, n, go = self.c, self.n, self.lit
        if isinstance(f, Atom):
            return self.atom_lit(f.name, k)
        if isinstance(f, Bot):
            return False
        if isinstance(f, Top):
            return True
        if isinstance(f, Initial):
            return k == 0
        if isinstance(f, Final):
            return k == n - 1
        if isinstance(f, And):
            return c.and_([go(f.left, k), go(f.right, k)])
        if isinstance(f, Or):
            return c.or_([go(f.left, k), go(f.right, k)])
        if isinstance(f, Impl):
            v = c.or_([neg(go(f.left, k)), go(f.right, k)])
            if self.there is not None:
                v = c.and_([v, self.there.lit(f, k)])
            return v
        if isinstance(f, Neg):
            v = neg(go(f.arg, k))
            if self.there is not None:
                v = c.and_([v, neg(self.there.lit(f.arg, k))])
            return v
        if isinstance(f, Iff):
            a, b = go(f.left, k), go(f.right, k)
            v = c.and_([c.or_([neg(a), b]), c.or_([neg(b), a])])
            if self.there is not None:
                v = c.and_([v, self.there.lit(f, k)])
            return v
        if isinstance(f, Prev):
            return go(f.arg, k - 1) if k > 0 else False
        if isinstance(f, WPrev):
            return go(f.arg, k - 1) if k > 0 else True
        if isinstance(f, Next):
            return go(f.arg, k + 1) if k < n - 1 else False
        if isinstance(f, WNext):
            return go(f.arg, k + 1) if k < n - 1 else True
        if isinstance(f, Until):
            b = go(f.right, k)
            if k == n - 1:
                return b
            return c.or_([b, c.and_([go(f.left, k), go(f, k + 1)])])
        if isinstance(f, Release):
            b = go(f.right, k)
            if k == n - 1:
                return b
            return c.and_([b, c.or_([go(f.left, k), go(f, k + 1)])])
        if isinstance(f, Since):
            b = go(f.right, k)
            if k == 0:
                return b
            return c.or_([b, c.and_([go(f.left, k), go(f, k - 1)])])
        if isinstance(f, Trigger):
            b = go(f.right, k)
            if k == 0:
                return b
            return c.and_([b, c.or_([go(f.left, k), go(f, k - 1)])])
        if isinstance(f, AlwaysAfter):
            a = go(f.arg, k)
            return a if k == n - 1 else c.and_([a, go(f, k + 1)])
        if isinstance(f, EvAfter):
            a = go(f.arg, k)
            return a if k == n - 1 else c.or_([a, go(f, k + 1)])
        if isinstance(f, AlwaysBefore):
            a = go(f.arg, k)
            return a if k == 0 else c.and_([a, go(f, k - 1)])
        if isinstance(f, EvBefore):
            a = go(f.arg, k)
            return a if k == 0 else c.or_([a, go(f, k - 1)])
        raise TypeError(f"not a formula: {f!r}")


class _Search:
    def __init__(self, formulas: list[Formula], length: int):
        self.formulas = formulas
        self.n = length + 1
        self.names = sorted(atoms(*formulas))
        self.points = [(a, k) for k in range(self.n) for a in self.names]

        # outer: candidate total models
        self.outer = Circuit()
        self.t_out = {p: self.outer.fresh() for p in self.points}
        self.enc_out = Encoder(self.outer, self.n, lambda a, k: self.t_out[(a, k)])
        for f in formulas:
            self.outer.assert_(self.enc_out.lit(f, 0))

        # inner: strictly smaller here-worlds for a fixed there-world
        self.inner = Circuit()
        self.t_in = {p: self.inner.fresh() for p in self.points}
        self.h_in = {p: self.inner.fresh() for p in self.points}
        t_enc = Encoder(self.inner, self.n, lambda a, k: self.t_in[(a, k)])
        h_enc = Encoder(self.inner, self.n, lambda a, k: self.h_in[(a, k)], there=t_enc)
        for p in self.points:
            self.inner.clause([-self.h_in[p], self.t_in[p]])
        for f in formulas:
            self.inner.assert_(t_enc.lit(f, 0))
            self.inner.assert_(h_enc.lit(f, 0))
        self.inner.assert_(
            self.inner.or_([self.inner.and_([self.t_in[p], -self.h_in[p]]) for p in self.points])
        )

    def trace(self, true_points) -> Trace:
        states = [set() for _ in range(self.n)]
        for a, k in true_points:
            states[k].add(a)
        return Trace(tuple(frozenset(s) for s in states))

    def smaller_witness(self, true_points: set) -> set | None:
        assumptions = [self.t_in[p] if p in true_points else -self.t_in[p] for p in self.points]
        if not self.inner.solve(assumptions):
            return None
        model = self.inner.model()
        return {p for p in self.points if self.h_in[p] in model}

    def refute(self, here: set):
        # every T' ⊋ H with ⟨H,T'⟩ a model is not an equilibrium model
        c = self.outer
        fixed = Encoder(c, self.n, lambda a, k: (a, k) in here, there=self.enc_out)
        parts = [self.t_out[p] for p in here]
        parts.append(c.or_([self.t_out[p] for p in self.points if p not in here]))
        parts.extend(fixed.lit(f, 0) for f in self.formulas)
        c.assert_(neg(c.and_(parts)))

    def run(self, limit: int | None = None) -> list[Trace]:
        found = []
        while limit is None or len(found) < limit:
            if not self.outer.solve():
                break
            model = self.outer.model()
            true_points = {p for p in self.points if self.t_out[p] in model}
            witness = self.smaller_witness(true_points)
            if witness is None:
                found.append(self.trace(true_points))
                self.outer.clause(
                    [-self.t_out[p] if p in true_points else self.t_out[p] for p in self.points]
                )
                if not self.points:
                    break
            else:
                self.refute(witness)
        return sorted(found)

    def close(self):
        self.outer.close()
        self.inner.close()


def equilibrium_search(formulas: Iterable[Formula], length: int, limit: int | None = None) -> list[Trace]:
    """Temporal equilibrium models of the given length, as sorted traces.

    Atoms not mentioned in any formula are false in every equilibrium model
    and are omitted from the returned states.
    """
    s = _Search(list(formulas), length)
    try:
        return s.run(limit)
    finally:
        s.close()


def is_equilibrium_search(formulas: Iterable[Formula], t: Trace) -> bool:
    formulas = list(formulas)
    s = _Search(formulas, t.length)
    try:
        mentioned = set(s.names)
        if any(a not in mentioned for state in t for a in state):
            return False
        true_points = {(a, k) for k, state in enumerate(t) for a in state}
        assumptions = [s.t_out[p] if p in true_points else -s.t_out[p] for p in s.points]
        if not s.outer.solve(assumptions):
            return False
        return s.smaller_witness(true_points) is None
    finally:
        s.close()
