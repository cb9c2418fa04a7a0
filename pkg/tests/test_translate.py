import pytest

from oracles import naive_tel
from teltrace.aspcore import GroundLiteral, emit_text, stable_models
from teltrace.corpus import read
from teltrace.equilibrium import tel_models
from teltrace.generate import random_program, rng_of
from teltrace.normalform import TemporalLiteral as L
from teltrace.normalform import TemporalProgram, TemporalRule, compile_theory, is_present_centered, to_normal_form
from teltrace.semantics import Trace
from teltrace.syntax import parse_theory
from teltrace.translate import (
    StampedAtom,
    bounded_solve,
    build_module,
    decode,
    incremental_solve,
    module_chain,
    tau_bounded,
    tau_literal,
    tau_star_rule,
)

A = StampedAtom
TWO_STEP = to_normal_form(parse_theory(read("two_step.tel")))


def test_stamped_atoms():
    assert str(A("a", 3)) == "a(3)" and str(A.q(2)) == "__q(2)"
    with pytest.raises(ValueError):
        A("a", -1)
    with pytest.raises(ValueError):
        A("__q", 1)


def test_tau_literal():
    assert tau_literal(3, L("a", True, True)) == GroundLiteral(A("a", 2))
    assert tau_literal(0, L("a")) == GroundLiteral(A("a", 0))
    assert tau_literal(2, L("b", False, True)) == GroundLiteral(A("b", 1), False)
    with pytest.raises(ValueError):
        tau_literal(0, L("a", True, True))


def test_tau_bounded_two_step():
    assert [r.text() for r in tau_bounded(TWO_STEP, 1).rules] == ["a(0).", "b(1) :- a(0).", ":- not b(1)."]
    assert [r.text() for r in tau_bounded(TWO_STEP, 0).rules] == ["a(0).", ":- not b(0)."]
    assert stable_models(tau_bounded(TWO_STEP, 0)) == []
    assert tau_bounded(TemporalProgram.of([]), 3).rules == ()
    assert tau_bounded(TWO_STEP, 2).atoms == {A(x, i) for x in "ab" for i in range(3)}


def test_tau_star_final_guard():
    final = TemporalRule("final", (L("b", False),), ())
    assert tau_star_rule(0, final).text() == ":- not b(0), not __q(1)."
    assert tau_star_rule(2, final).text() == ":- not b(2), not __q(3)."
    dyn = TemporalRule("dynamic", (L("a", True, True),), (L("b"),))
    assert tau_star_rule(1, dyn).text() == "b(1) :- a(0)."


def test_modules_of_two_step():
    m0 = build_module(TWO_STEP, 0)
    assert [r.text() for r in m0.program.rules] == ["a(0).", ":- not b(0), not __q(1)."]
    assert m0.inputs == {A.q(1)} and m0.outputs == {A("a", 0), A("b", 0)}
    m2 = build_module(TWO_STEP, 2)
    assert sorted(r.text() for r in m2.program.rules) == sorted(
        ["b(2) :- a(1).", ":- not b(2), not __q(3).", "__q(2)."])
    assert m2.inputs == {A("a", 1), A("b", 1), A.q(3)}
    assert m2.outputs == {A("a", 2), A("b", 2), A.q(2)}


def test_empty_program_module():
    m = build_module(TemporalProgram(frozenset({"a"}), frozenset(), ()), 1)
    assert [r.text() for r in m.program.rules] == ["__q(1)."]
    assert m.inputs == {A("a", 0), A.q(2)} and m.outputs == {A("a", 1), A.q(1)}


def test_chain_signature():
    for k in range(4):
        m = module_chain(TWO_STEP, k)
        assert m.inputs == {A.q(k + 1)}
        assert m.outputs == {A(x, i) for x in "ab" for i in range(k + 1)} | {A.q(i) for i in range(1, k + 1)}


def test_build_module_needs_present_centered():
    p = TemporalProgram.of([TemporalRule("dynamic", (L("a"),), (L("b", True, True),))])
    with pytest.raises(ValueError):
        build_module(p, 1)
    # the bounded route still accepts it
    assert [r.text() for r in tau_bounded(p, 1).rules] == ["b(0) :- a(1)."]


def test_reserved_q_names():
    p = TemporalProgram.of([TemporalRule("initial", (), (L("__q"),))])
    with pytest.raises(ValueError):
        tau_bounded(p, 0)


def test_incremental_two_step():
    (r0, r1) = incremental_solve(TWO_STEP, 0, 3, "first")
    assert not r0.satisfiable
    assert r1.horizon == 1
    assert r1.models == [frozenset({A("a", 0), A("b", 1), A.q(1)})]
    assert r1.trace_models == [Trace.of({"a"}, {"b"})]
    full = incremental_solve(TWO_STEP, 0, 3, "exhaustive")
    assert [r.satisfiable for r in full] == [False, True, False, False]


def test_incremental_empty_program():
    (r,) = incremental_solve(TemporalProgram.of([]), 0, 0)
    assert r.models == [frozenset()] and r.trace_models == [Trace.of(set())]


def test_incremental_argument_checks():
    with pytest.raises(ValueError):
        incremental_solve(TWO_STEP, 3, 1)
    with pytest.raises(ValueError):
        incremental_solve(TWO_STEP, 0, 1, "sometimes")


def test_modes_on_alternation():
    th = parse_theory("#always+ (~a -> #next a).")
    q = compile_theory(th)
    assert is_present_centered(q)
    reports = incremental_solve(q, 0, 5, "exhaustive")
    assert [r.horizon for r in reports if r.satisfiable] == [1, 3, 5]
    for r in reports:
        assert r.projected({"a"}) == tel_models(th, r.horizon)
    first = incremental_solve(q, 0, 5, "first")
    assert [r.horizon for r in first] == [0, 1] and len(first[-1].models) == 1
    assert [r.horizon for r in incremental_solve(q, 2, 5, "all-at-first")] == [2, 3]


def test_decode():
    m = {A("a", 0), A("b", 1), A.q(1), A("__nf_1", 0)}
    assert decode(m, 1, {"a", "b"}) == Trace.of({"a"}, {"b"})


def test_bounded_on_random_programs():
    rng = rng_of(41)
    for _ in range(60):
        p = random_program(rng)
        for n in range(3):
            got = sorted(decode(m, n, p.alphabet) for m in stable_models(tau_bounded(p, n)))
            assert [tuple(t) for t in got] == naive_tel(p.to_theory().formulas, n, p.alphabet)


def test_pointwise_on_random_programs():
    rng = rng_of(42)
    for _ in range(60):
        p = random_program(rng, present_centered=True)
        for r in incremental_solve(p, 0, 3, "exhaustive"):
            assert r.projected(p.alphabet) == tel_models(p, r.horizon)
            assert sorted(r.trace_models) == sorted(bounded_solve(p, r.horizon).trace_models)
            for m in r.models:
                assert {a.stamp for a in m if a.aux} == set(range(1, r.horizon + 1))


def test_ground_text_is_stable():
    header = {"alphabet": ["a", "b"], "translation": "bounded", "length": 1}
    assert emit_text(tau_bounded(TWO_STEP, 1), header) == read("expected/two_step.ground1.lp")
