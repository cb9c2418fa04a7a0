"""Finite traces, HT-traces and THT satisfaction.

Truth values of a formula along a trace of ``n = λ+1`` states are computed
all at once as an ``n``-bit integer whose bit ``k`` says whether the formula
holds at time point ``k``.  The "there" world is plain LTL over ``T``; the
"here" world only differs at implication, which must also hold at ``T``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import check_budget
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
    Theory,
    Top,
    Trigger,
    Until,
    WNext,
    WPrev,
    atoms,
    has_implication,
    rebuild,
)

__all__ = [
    "Trace",
    "HTTrace",
    "TraceEvaluator",
    "sat",
    "sat_ltl",
    "truth_vector",
    "is_model",
    "all_traces",
    "sub_traces",
    "all_httraces",
    "EquivalenceResult",
    "equivalent_bounded",
    "initially_equivalent_bounded",
    "dual_boolean",
    "swap_time",
    "reverse",
    "parse_trace",
    "format_trace",
]


@dataclass(frozen=True)
class Trace:
    """A finite sequence of states ``H_0 .. H_λ``."""

    states: tuple[frozenset[str], ...]

    def __post_init__(self):
        if not self.states:
            raise ValueError("a trace has at least one state")
        object.__setattr__(self, "states", tuple(frozenset(s) for s in self.states))

    @classmethod
    def of(cls, *states: Iterable[str]) -> "Trace":
        return cls(tuple(frozenset(s) for s in states))

    @classmethod
    def empty(cls, length: int) -> "Trace":
        return cls((frozenset(),) * (length + 1))

    @property
    def length(self) -> int:
        return len(self.states) - 1

    def __len__(self):
        return len(self.states)

    def __getitem__(self, i):
        return self.states[i]

    def __iter__(self):
        return iter(self.states)

    def atoms(self) -> frozenset[str]:
        return frozenset().union(*self.states)

    def sort_key(self):
        return (len(self.states), tuple(tuple(sorted(s)) for s in self.states))

    def __lt__(self, other: "Trace"):
        return self.sort_key() < other.sort_key()

    def le(self, other: "Trace") -> bool:
        """Componentwise inclusion ``self ≤ other``."""
        return len(self) == len(other) and all(a <= b for a, b in zip(self, other))

    def restrict(self, alphabet: Iterable[str]) -> "Trace":
        keep = frozenset(alphabet)
        return Trace(tuple(s & keep for s in self.states))

    def __str__(self):
        return "[" + ", ".join("{" + " ".join(sorted(s)) + "}" for s in self.states) + "]"

    def __repr__(self):
        return f"Trace.of({', '.join(repr(sorted(s)) for s in self.states)})"


@dataclass(frozen=True)
class HTTrace:
    here: Trace
    there: Trace

    def __post_init__(self):
        if self.here.length != self.there.length:
            raise ValueError("here and there traces must have the same length")
        if not self.here.le(self.there):
            raise ValueError("here trace must be componentwise included in there trace")

    @classmethod
    def total_of(cls, t: Trace) -> "HTTrace":
        return cls(t, t)

    @property
    def length(self) -> int:
        return self.there.length

    def total(self) -> bool:
        return self.here == self.there

    def __str__(self):
        return f"<H={self.here}, T={self.there}>"


def _masks(t: Trace) -> dict[str, int]:
    out: dict[str, int] = {}
    for k, state in enumerate(t.states):
        for a in state:
            out[a] = out.get(a, 0) | (1 << k)
    return out


def _fold_back(n, init, step):
    # value at λ is init(λ); value at k derived from value at k+1
    v = 1 << (n - 1) if init(n - 1) else 0
    prev = bool(v)
    for k in range(n - 2, -1, -1):
        prev = step(k, prev)
        if prev:
            v |= 1 << k
    return v


def _fold_fwd(n, init, step):
    v = 1 if init(0) else 0
    prev = bool(v)
    for k in range(1, n):
        prev = step(k, prev)
        if prev:
            v |= 1 << k
    return v


def _bit(v, k):
    return (v >> k) & 1 == 1


def _compute(f: Formula, amask, n: int, memo: dict, there) -> int:
    """Truth vector of ``f``; ``there`` is None for the total/LTL world."""
    hit = memo.get(id(f))
    if hit is not None and hit[0] is f:
        return hit[1]
    full = (1 << n) - 1
    last = 1 << (n - 1)

    def go(g):
        return _compute(g, amask, n, memo, there)

    if isinstance(f, Atom):
        v = amask.get(f.name, 0)
    elif isinstance(f, Bot):
        v = 0
    elif isinstance(f, Top):
        v = full
    elif isinstance(f, Initial):
        v = 1
    elif isinstance(f, Final):
        v = last
    elif isinstance(f, And):
        v = go(f.left) & go(f.right)
    elif isinstance(f, Or):
        v = go(f.left) | go(f.right)
    elif isinstance(f, Impl):
        v = (~go(f.left) | go(f.right)) & full
        if there is not None:
            v &= (~there(f.left) | there(f.right)) & full
    elif isinstance(f, Neg):
        v = ~go(f.arg) & full
        if there is not None:
            v &= ~there(f.arg)
    elif isinstance(f, Iff):
        a, b = go(f.left), go(f.right)
        v = (~a | b) & (~b | a) & full
        if there is not None:
            ta, tb = there(f.left), there(f.right)
            v &= (~ta | tb) & (~tb | ta)
    elif isinstance(f, Prev):
        v = (go(f.arg) << 1) & full
    elif isinstance(f, WPrev):
        v = ((go(f.arg) << 1) | 1) & full
    elif isinstance(f, Next):
        v = go(f.arg) >> 1
    elif isinstance(f, WNext):
        v = (go(f.arg) >> 1) | last
    elif isinstance(f, (Until, Release, Since, Trigger)):
        a, b = go(f.left), go(f.right)
        if isinstance(f, Until):
            v = _fold_back(n, lambda k: _bit(b, k), lambda k, p: _bit(b, k) or (_bit(a, k) and p))
        elif isinstance(f, Release):
            v = _fold_back(n, lambda k: _bit(b, k), lambda k, p: _bit(b, k) and (_bit(a, k) or p))
        elif isinstance(f, Since):
            v = _fold_fwd(n, lambda k: _bit(b, k), lambda k, p: _bit(b, k) or (_bit(a, k) and p))
        else:
            v = _fold_fwd(n, lambda k: _bit(b, k), lambda k, p: _bit(b, k) and (_bit(a, k) or p))
    elif isinstance(f, (AlwaysAfter, EvAfter, AlwaysBefore, EvBefore)):
        a = go(f.arg)
        if isinstance(f, AlwaysAfter):
            v = _fold_back(n, lambda k: _bit(a, k), lambda k, p: _bit(a, k) and p)
        elif isinstance(f, EvAfter):
            v = _fold_back(n, lambda k: _bit(a, k), lambda k, p: _bit(a, k) or p)
        elif isinstance(f, AlwaysBefore):
            v = _fold_fwd(n, lambda k: _bit(a, k), lambda k, p: _bit(a, k) and p)
        else:
            v = _fold_fwd(n, lambda k: _bit(a, k), lambda k, p: _bit(a, k) or p)
    else:
        raise TypeError(f"not a formula: {f!r}")
    memo[id(f)] = (f, v)
    return v


class TraceEvaluator:
    """Evaluates formulas against a fixed there-trace ``T``.

    LTL values on ``T`` are cached across calls, so checking many here-traces
    ``H ≤ T`` only recomputes the here-world part.
    """

    def __init__(self, there: Trace):
        self.there_trace = there
        self.n = len(there)
        self._tmask = _masks(there)
        self._tmemo: dict = {}

    def there(self, f: Formula) -> int:
        return _compute(f, self._tmask, self.n, self._tmemo, None)

    def here(self, f: Formula, here: Trace, memo: dict | None = None) -> int:
        if memo is None:
            memo = {}
        return _compute(f, _masks(here), self.n, memo, self.there)

    def here_models(self, formulas, here: Trace) -> bool:
        """``⟨H,T⟩,0 ⊨ φ`` for every formula (``H`` assumed ``≤ T``)."""
        amask = _masks(here)
        memo: dict = {}
        return all(_compute(f, amask, self.n, memo, self.there) & 1 for f in formulas)

    def there_models(self, formulas) -> bool:
        return all(self.there(f) & 1 for f in formulas)


def _check_point(k: int, length: int):
    if not 0 <= k <= length:
        raise ValueError(f"time point {k} outside 0..{length}")


def _check_alphabet(f: Formula, alphabet):
    if alphabet is not None:
        extra = atoms(f) - frozenset(alphabet)
        if extra:
            raise ValueError(f"atoms not in alphabet: {sorted(extra)}")


def truth_vector(m: HTTrace, f: Formula) -> int:
    """Bitmask of the time points at which ``⟨H,T⟩`` satisfies ``f``."""
    ev = TraceEvaluator(m.there)
    if m.total():
        return ev.there(f)
    return ev.here(f, m.here)


def sat(m: HTTrace, k: int, f: Formula, alphabet=None) -> bool:
    """``⟨H,T⟩, k ⊨ f``."""
    _check_point(k, m.length)
    _check_alphabet(f, alphabet)
    return _bit(truth_vector(m, f), k)


def sat_ltl(t: Trace, k: int, f: Formula, alphabet=None) -> bool:
    """``T, k ⊨ f`` in LTL over finite traces."""
    _check_point(k, t.length)
    _check_alphabet(f, alphabet)
    return _bit(TraceEvaluator(t).there(f), k)


def is_model(m: HTTrace, theory) -> bool:
    formulas = list(theory)
    ev = TraceEvaluator(m.there)
    if m.total():
        return ev.there_models(formulas)
    return ev.here_models(formulas, m.here)


# enumeration ---------------------------------------------------------------


def all_traces(alphabet: Iterable[str], length: int) -> Iterator[Trace]:
    """Every trace of the given length, in sorted order."""
    alpha = sorted(alphabet)
    states = [frozenset(c) for r in range(len(alpha) + 1) for c in itertools.combinations(alpha, r)]
    states.sort(key=lambda s: tuple(sorted(s)))
    for combo in itertools.product(states, repeat=length + 1):
        yield Trace(combo)


def _substates(s: frozenset[str]) -> list[frozenset[str]]:
    items = sorted(s)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


def sub_traces(t: Trace, strict: bool = False) -> Iterator[Trace]:
    """Every ``H ≤ t`` (``H < t`` when ``strict``)."""
    for combo in itertools.product(*(_substates(s) for s in t.states)):
        h = Trace(combo)
        if strict and h == t:
            continue
        yield h


def all_httraces(alphabet: Iterable[str], length: int) -> Iterator[HTTrace]:
    for t in all_traces(alphabet, length):
        for h in sub_traces(t):
            yield HTTrace(h, t)


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witness: tuple[HTTrace, int] | None = None

    def __bool__(self):
        return self.equivalent


def _compare(phi, psi, lmax, alphabet, budget, initial_only) -> EquivalenceResult:
    alpha = frozenset(atoms(phi, psi)) if alphabet is None else frozenset(alphabet)
    _check_alphabet(phi, alpha)
    _check_alphabet(psi, alpha)
    check_budget((lmax + 1) * len(alpha), budget, "bounded equivalence")
    for length in range(lmax + 1):
        for t in all_traces(alpha, length):
            ev = TraceEvaluator(t)
            for h in sub_traces(t):
                a = ev.here(phi, h)
                b = ev.here(psi, h)
                diff = a ^ b
                if initial_only:
                    diff &= 1
                if diff:
                    k = (diff & -diff).bit_length() - 1
                    return EquivalenceResult(False, (HTTrace(h, t), k))
    return EquivalenceResult(True)


def equivalent_bounded(phi: Formula, psi: Formula, lmax: int, alphabet=None,
                       budget: int = 16) -> EquivalenceResult:
    """Global THT equivalence over all HT-traces of length ``≤ lmax``."""
    return _compare(phi, psi, lmax, alphabet, budget, False)


def initially_equivalent_bounded(phi: Formula, psi: Formula, lmax: int, alphabet=None,
                                 budget: int = 16) -> EquivalenceResult:
    """Same THT models (truth at point 0) over traces of length ``≤ lmax``."""
    return _compare(phi, psi, lmax, alphabet, budget, True)


# dualities -----------------------------------------------------------------

_BOOLEAN_DUAL = {
    And: Or, Or: And, Top: Bot, Bot: Top,
    Until: Release, Release: Until,
    Next: WNext, WNext: Next,
    AlwaysAfter: EvAfter, EvAfter: AlwaysAfter,
    Since: Trigger, Trigger: Since,
    Prev: WPrev, WPrev: Prev,
    AlwaysBefore: EvBefore, EvBefore: AlwaysBefore,
}

_TIME_SWAP = {
    Until: Since, Since: Until,
    Release: Trigger, Trigger: Release,
    Next: Prev, Prev: Next,
    WNext: WPrev, WPrev: WNext,
    AlwaysAfter: AlwaysBefore, AlwaysBefore: AlwaysAfter,
    EvAfter: EvBefore, EvBefore: EvAfter,
    Initial: Final, Final: Initial,
}


def _map_kinds(f: Formula, table) -> Formula:
    kids = [_map_kinds(c, table) for c in f.children]
    kind = table.get(type(f))
    if kind is None:
        return rebuild(f, kids)
    return kind(*kids)


def dual_boolean(f: Formula) -> Formula:
    """The Boolean dual δ of an implication-free formula."""
    if has_implication(f) or any(isinstance(g, (Initial, Final)) for g in _walk(f)):
        raise ValueError("dual_boolean requires an implication-free formula")
    return _map_kinds(f, _BOOLEAN_DUAL)


def _walk(f):
    yield f
    for c in f.children:
        yield from _walk(c)


def swap_time(f: Formula) -> Formula:
    """Exchange every past connective with its future mirror (σ)."""
    return _map_kinds(f, _TIME_SWAP)


def reverse(m: HTTrace) -> HTTrace:
    return HTTrace(Trace(m.here.states[::-1]), Trace(m.there.states[::-1]))


# trace files ---------------------------------------------------------------


def parse_trace(text: str, alphabet=None) -> Trace:
    """Read one state per line, e.g. ``{loaded}`` then ``{}``."""
    states = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if not (line.startswith("{") and line.endswith("}")):
            raise ValueError(f"line {lineno}: expected a state like {{a b}}")
        names = line[1:-1].replace(",", " ").split()
        if alphabet is not None:
            extra = set(names) - set(alphabet)
            if extra:
                raise ValueError(f"line {lineno}: atoms not in alphabet: {sorted(extra)}")
        states.append(frozenset(names))
    if not states:
        raise ValueError("trace file has no states")
    return Trace(tuple(states))


def format_trace(t: Trace) -> str:
    return "".join("{" + " ".join(sorted(s)) + "}\n" for s in t.states)
