"""THT models and temporal equilibrium (stable) models at fixed lengths.

The brute-force engine enumerates candidate traces exhaustively and is the
reference oracle.  ``engine="search"`` delegates to ``htsearch`` for lengths
and alphabets too large to enumerate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import check_budget
from .semantics import HTTrace, Trace, TraceEvaluator, all_traces, sub_traces
from .syntax.formula import Formula, Theory, atoms

__all__ = [
    "ModelSet",
    "tht_models",
    "is_equilibrium",
    "tel_models",
    "tel_models_upto",
]

ENGINES = ("brute", "search")


def _formulas_and_alphabet(theory, alphabet) -> tuple[list[Formula], frozenset[str]]:
    if hasattr(theory, "to_theory"):
        theory = theory.to_theory()
    if isinstance(theory, Formula):
        theory = [theory]
    if isinstance(theory, Theory):
        formulas = list(theory.formulas)
        alpha = theory.alphabet
    else:
        formulas = list(theory)
        alpha = atoms(*formulas)
    if alphabet is not None:
        alpha = alpha | frozenset(alphabet)
    return formulas, frozenset(alpha)


def tht_models(theory, length: int, alphabet=None, budget: int | None = None) -> list[HTTrace]:
    """All HT-traces of the given length that satisfy every formula at 0."""
    formulas, alpha = _formulas_and_alphabet(theory, alphabet)
    check_budget((length + 1) * len(alpha), budget, "THT model enumeration")
    out = []
    for t in all_traces(alpha, length):
        ev = TraceEvaluator(t)
        if not ev.there_models(formulas):
            # persistence: no ⟨H,T⟩ can be a model either
            continue
        for h in sub_traces(t):
            if ev.here_models(formulas, h):
                out.append(HTTrace(h, t))
    out.sort(key=lambda m: (m.there.sort_key(), m.here.sort_key()))
    return out


def _minimal(ev: TraceEvaluator, formulas, t: Trace) -> bool:
    return not any(ev.here_models(formulas, h) for h in sub_traces(t, strict=True))


def is_equilibrium(t: Trace, theory, budget: int | None = None, engine: str = "brute") -> bool:
    """``⟨T,T⟩`` is a model and no ``H < T`` gives a model ``⟨H,T⟩``."""
    formulas, _ = _formulas_and_alphabet(theory, None)
    if engine == "search":
        from .htsearch import is_equilibrium_search

        return is_equilibrium_search(formulas, t)
    _check_engine(engine)
    check_budget(sum(len(s) for s in t.states), budget, "minimality check")
    ev = TraceEvaluator(t)
    return ev.there_models(formulas) and _minimal(ev, formulas, t)


def _check_engine(engine):
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")


def tel_models(theory, length: int, alphabet=None, budget: int | None = None,
               engine: str = "brute") -> list[Trace]:
    """Temporal stable models of the given length, sorted.

    Alphabet atoms no formula mentions are false in every stable model, so
    the brute-force engine fixes them false instead of enumerating them.
    """
    _check_engine(engine)
    formulas, alpha = _formulas_and_alphabet(theory, alphabet)
    if engine == "search":
        from .htsearch import equilibrium_search

        return equilibrium_search(formulas, length)
    mentioned = atoms(*formulas)
    check_budget((length + 1) * len(mentioned), budget, "stable model enumeration")
    out = []
    for t in all_traces(mentioned, length):
        ev = TraceEvaluator(t)
        if ev.there_models(formulas) and _minimal(ev, formulas, t):
            out.append(t)
    out.sort()
    return out


@dataclass
class ModelSet:
    """Stable models grouped by length ``0..lmax``."""

    alphabet: frozenset[str]
    by_length: dict[int, list[Trace]] = field(default_factory=dict)
    theory: object = None

    def __getitem__(self, length: int) -> list[Trace]:
        return self.by_length[length]

    def lengths_with_models(self) -> list[int]:
        return [k for k, v in sorted(self.by_length.items()) if v]

    def all(self) -> list[Trace]:
        return [t for _, v in sorted(self.by_length.items()) for t in v]

    def __len__(self):
        return sum(len(v) for v in self.by_length.values())


def tel_models_upto(theory, lmax: int, alphabet=None, budget: int | None = None,
                    engine: str = "brute") -> ModelSet:
    formulas, alpha = _formulas_and_alphabet(theory, alphabet)
    ms = ModelSet(alpha, theory=theory)
    for length in range(lmax + 1):
        ms.by_length[length] = tel_models(formulas, length, alpha, budget, engine)
    return ms


def project(models: Iterable[Trace], alphabet) -> list[Trace]:
    """Restrict traces to ``alphabet``; duplicates are removed."""
    return sorted({t.restrict(alphabet) for t in models})
