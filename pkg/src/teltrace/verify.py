"""Cross-validation battery for a single theory or program.

Every route to the temporal stable models is compared with the oracle at
each length: the normal form, the bounded translation, and (for
present-centered programs) the point-wise module chain.  Persistence,
LTL collapse and time-reversal are sampled on random HT-traces.  The
translation under test can be injected, which is how the negative control
works.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .aspcore import stable_models
from .equilibrium import project, tel_models
from .errors import budget_bits
from .generate import random_httrace, rng_of
from .normalform import TemporalProgram, compile_theory, is_present_centered, to_normal_form
from .semantics import HTTrace, reverse, sat, sat_ltl, swap_time
from .syntax.formula import Theory, atoms
from .translate import decode, incremental_solve, tau_bounded


@dataclass
class Mismatch:
    check: str
    length: int | None
    expected: object
    got: object

    def reproducer(self) -> str:
        where = "" if self.length is None else f" at length {self.length}"
        return f"{self.check}{where}: expected {_show(self.expected)}, got {_show(self.got)}"


def _show(v):
    if isinstance(v, (list, tuple, set, frozenset)):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


@dataclass
class VerifyReport:
    checks: list[tuple[str, int | None, bool]] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def record(self, check: str, length, expected, got) -> bool:
        good = expected == got
        self.checks.append((check, length, good))
        if not good:
            self.mismatches.append(Mismatch(check, length, expected, got))
        return good

    def minimal(self) -> Mismatch | None:
        """The mismatch with the shortest length, as a reproducer."""
        if not self.mismatches:
            return None
        return min(self.mismatches, key=lambda m: (m.length is None, m.length or 0))


def _oracle(formulas, length, alphabet, budget):
    mentioned = atoms(*formulas)
    engine = "brute" if (length + 1) * len(mentioned) <= budget_bits(budget) else "search"
    return tel_models(formulas, length, alphabet, budget=budget, engine=engine)


def verify_instance(source, lmax: int = 4, tau: Callable = tau_bounded, seed=0, samples: int = 50,
                    budget: int | None = None) -> VerifyReport:
    report = VerifyReport()
    if isinstance(source, TemporalProgram):
        program = source
        formulas = list(program.to_theory().formulas)
        alphabet = program.alphabet
        exact = None
    else:
        theory = source if isinstance(source, Theory) else Theory.of(list(source))
        formulas = list(theory.formulas)
        alphabet = theory.alphabet
        program = compile_theory(theory)
        exact = to_normal_form(theory)

    pointwise = {}
    if is_present_centered(program):
        for r in incremental_solve(program, 0, lmax, mode="exhaustive"):
            pointwise[r.horizon] = r

    for n in range(lmax + 1):
        expected = project(_oracle(formulas, n, alphabet, budget), alphabet)
        if exact is not None:
            got = project(tel_models(exact, n, engine="search"), alphabet)
            report.record("normal form", n, expected, got)
            if program != exact:
                got = project(tel_models(program, n, engine="search"), alphabet)
                report.record("past-future reduction", n, expected, got)
        ground = tau(program, n)
        got = project([decode(m, n, program.full_alphabet) for m in stable_models(ground, budget=budget)], alphabet)
        report.record("bounded translation", n, expected, got)
        if n in pointwise:
            r = pointwise[n]
            report.record("point-wise translation", n, expected, r.projected(alphabet))
            qs = {frozenset(a.stamp for a in m if a.aux) for m in r.models}
            report.record("q-family", n, {frozenset(range(1, n + 1))} if r.models else set(), qs)

    rng = rng_of(seed)
    alpha = sorted(alphabet | atoms(*formulas)) or ["a"]
    for _ in range(samples):
        n = rng.randint(0, min(lmax, 3))
        m = random_httrace(rng, alpha, n)
        total = HTTrace.total_of(m.there)
        for f in formulas:
            k = rng.randint(0, n)
            if sat(m, k, f, alpha) and not sat(total, k, f, alpha):
                report.record("persistence", n, f"{m} |= {f} at {k} implies the total trace does", "violated")
            if sat(total, k, f, alpha) != sat_ltl(m.there, k, f, alpha):
                report.record("LTL collapse", n, f"total {m.there} agrees with LTL on {f}", "disagrees")
            if sat(m, k, f, alpha) != sat(reverse(m), n - k, swap_time(f), alpha):
                report.record("time reversal", n, f"{f} at {k} mirrors at {n - k}", "differs")
    report.checks.append(("semantic samples", None, True))
    return report
