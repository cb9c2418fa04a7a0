import pytest

from oracles import naive_tel
from teltrace.equilibrium import is_equilibrium, project, tel_models, tel_models_upto, tht_models
from teltrace.errors import BudgetExceeded
from teltrace.generate import random_theory, rng_of
from teltrace.semantics import Trace, is_model, HTTrace
from teltrace.syntax import parse_theory
from teltrace.syntax.formula import (
    AlwaysAfter,
    And,
    Atom,
    EvAfter,
    Impl,
    Neg,
    Next,
    Or,
    Prev,
)

a, b = Atom("a"), Atom("b")
loaded, unloaded = Atom("loaded"), Atom("unloaded")
INERTIA = AlwaysAfter(Impl(And(Prev(loaded), Neg(unloaded)), loaded))


def T(*states):
    return Trace.of(*states)


def test_tht_counts():
    assert len(tht_models([], 0, {"a"})) == 3
    (m,) = tht_models([a], 0, {"a"})
    assert m.here == m.there == T({"a"})
    assert tht_models([Next(Next(b))], 1) == []


def test_is_equilibrium_examples():
    gf = [AlwaysAfter(EvAfter(a))]
    assert is_equilibrium(T(set(), set(), {"a"}), gf)
    assert not is_equilibrium(T({"a"}, set(), {"a"}), gf)
    assert is_equilibrium(T(set()), [])


def test_inertia_keeps_loaded():
    for n in range(5):
        assert tel_models([loaded, INERTIA], n, {"loaded", "unloaded"}) == [T(*[{"loaded"}] * (n + 1))]


def test_inertia_with_scheduled_unload():
    ms = tel_models_upto([And(loaded, Next(Next(unloaded))), INERTIA], 3)
    assert ms[0] == ms[1] == []
    assert ms[3] == [T({"loaded"}, {"loaded"}, {"unloaded"}, set())]
    assert ms.lengths_with_models() == [2, 3]


def test_alternation():
    f = [AlwaysAfter(Impl(Neg(a), Next(a)))]
    assert tel_models(f, 1) == [T(set(), {"a"})]
    assert tel_models(f, 2) == []
    assert tel_models(f, 3) == [T(set(), {"a"}, set(), {"a"})]


def test_support_everywhere():
    f = [AlwaysAfter(Impl(Neg(Next(a)), a)), AlwaysAfter(Impl(Next(a), a))]
    assert tel_models(f, 2) == [T({"a"}, {"a"}, {"a"})]


def test_upto_examples():
    ms = tel_models_upto([AlwaysAfter(EvAfter(a))], 2)
    assert ms.by_length == {0: [T({"a"})], 1: [T(set(), {"a"})], 2: [T(set(), set(), {"a"})]}
    assert tel_models_upto([], 1, {"a"}).by_length == {0: [T(set())], 1: [T(set(), set())]}
    assert len(ms) == 3 and ms.all()[0] == T({"a"})


def test_engines_agree_and_self_check():
    rng = rng_of(5)
    for _ in range(60):
        fs = random_theory(rng, ("a", "b"), 3)
        for n in range(3):
            brute = tel_models(fs, n, {"a", "b"})
            assert brute == tel_models(fs, n, {"a", "b"}, engine="search")
            for t in brute:
                assert is_model(HTTrace.total_of(t), fs)
                assert is_equilibrium(t, fs)


def test_matches_naive_oracle():
    rng = rng_of(6)
    for _ in range(80):
        fs = random_theory(rng, ("a", "b"), 3)
        for n in range(3):
            assert [tuple(t) for t in tel_models(fs, n, {"a", "b"})] == naive_tel(fs, n, {"a", "b"})


def test_growth_shrinks_tht():
    rng = rng_of(8)
    for _ in range(40):
        g, d = random_theory(rng), random_theory(rng)
        for n in range(2):
            assert set(tht_models(g + d, n, "ab")) <= set(tht_models(g, n, "ab"))


def test_excluded_middle_gives_ltl_models():
    rng = rng_of(9)
    em = [AlwaysAfter(Or(a, Neg(a))), AlwaysAfter(Or(b, Neg(b)))]
    for _ in range(30):
        g = random_theory(rng)
        for n in range(2):
            expected = sorted(m.there for m in tht_models(g, n, "ab") if m.total())
            assert tel_models(g + em, n, "ab") == expected


def test_budget_is_a_hard_error():
    with pytest.raises(BudgetExceeded):
        tel_models([a], 30, {"a"}, budget=10)


def test_wider_alphabet_and_projection():
    ms = tel_models([a], 0, {"a", "z"})
    assert ms == [T({"a"})]
    assert project([T({"a", "z"}), T({"a"})], {"a"}) == [T({"a"})]


def test_accepts_parsed_theory():
    th = parse_theory("a.\n#program dynamic.\nb :- 'a.\n#program final.\n:- not b.")
    assert tel_models(th, 1) == [T({"a"}, {"b"})]
