import random
from itertools import combinations

import pytest

from oracles import naive_stable, reachability_sccs
from teltrace.aspcore import (
    CompositionCheck,
    GroundLiteral,
    GroundRule,
    LogicProgram,
    Module,
    compositional,
    emit_text,
    is_model,
    join,
    positive_dependency_graph,
    stable_models,
    strongly_connected_components,
)
from teltrace.equilibrium import tel_models
from teltrace.errors import BudgetExceeded, NotCompositional
from teltrace.corpus import read
from teltrace.normalform import TemporalLiteral, TemporalProgram, TemporalRule, to_normal_form
from teltrace.syntax import parse_theory
from teltrace.translate import StampedAtom, build_module


def g(head=(), body=()):
    return GroundRule(tuple(head), tuple(body))


def n(a):
    return GroundLiteral(a, False)


def as_pairs(rules):
    return [([(l.atom, l.positive) for l in r.head], [(l.atom, l.positive) for l in r.body]) for r in rules]


def random_ground(rng, atoms, max_rules=4):
    def lit():
        return GroundLiteral(rng.choice(atoms), rng.random() < 0.6)

    rules = [g([lit() for _ in range(rng.randint(0, 2))], [lit() for _ in range(rng.randint(0, 2))])
             for _ in range(rng.randint(1, max_rules))]
    return LogicProgram(frozenset(atoms), tuple(rules))


def test_rule_rendering():
    assert g(["a"]).text() == "a."
    assert g([], [n("b")]).text() == ":- not b."
    assert g(["b"], ["a"]).text() == "b :- a."
    assert g(["a", n("c")], ["b", n("d")]).text() == "a | not c :- b, not d."
    assert g().text() == ":- #true."


def test_program_rejects_stray_atoms():
    with pytest.raises(ValueError):
        LogicProgram(frozenset({"a"}), (g(["b"]),))


def test_small_examples():
    assert stable_models(LogicProgram.of([g(["a"], ["a"])])) == [frozenset()]
    assert stable_models(LogicProgram.of([g(["a", "b"])])) == [frozenset({"a"}), frozenset({"b"})]
    assert stable_models(LogicProgram.of([g(["a"], [n("b")]), g(["b"], [n("a")])])) == [
        frozenset({"a"}), frozenset({"b"})]
    assert stable_models(LogicProgram.of([g([], [n("a")])])) == []


@pytest.mark.parametrize("engine", ["brute", "search"])
def test_agrees_with_reduct_oracle(engine):
    rng = random.Random(31)
    for _ in range(300):
        p = random_ground(rng, ["a", "b", "c"])
        got = stable_models(p, engine=engine)
        assert got == sorted(naive_stable(as_pairs(p.rules), p.atoms), key=lambda s: (len(s), sorted(s)))
        assert all(is_model(x, p) for x in got)


def test_single_state_matches_temporal_layer():
    rng = random.Random(32)
    for _ in range(100):
        p = random_ground(rng, ["a", "b"], 3)
        rules = [TemporalRule("initial", tuple(TemporalLiteral(l.atom, l.positive) for l in r.body),
                              tuple(TemporalLiteral(l.atom, l.positive) for l in r.head)) for r in p.rules]
        tp = TemporalProgram(frozenset({"a", "b"}), frozenset(), tuple(rules))
        assert [t[0] for t in tel_models(tp, 0)] == stable_models(p)


def test_budget():
    atoms = [f"x{i}" for i in range(12)]
    p = LogicProgram.of([g([a]) for a in atoms])
    with pytest.raises(BudgetExceeded):
        stable_models(p, engine="brute", budget=8)
    assert stable_models(p) == [frozenset(atoms)]


def test_module_invariants():
    with pytest.raises(ValueError):
        Module(LogicProgram.of([g(["a"])]), {"a"}, {"a"})
    with pytest.raises(ValueError):
        Module(LogicProgram.of([g(["a"], ["b"])]), set(), {"a"})
    with pytest.raises(ValueError):
        Module(LogicProgram.of([g(["a"], ["b"])]), {"a"}, {"b"})


def test_positive_loop_not_compositional():
    m1 = Module.of([g(["a"], ["b"])], {"b"}, {"a"})
    m2 = Module.of([g(["b"], ["a"])], {"a"}, {"b"})
    check = compositional(m1, m2)
    assert not check and check.component == {"a", "b"}
    with pytest.raises(NotCompositional) as e:
        join(m1, m2)
    assert e.value.component == {"a", "b"}


def test_join_with_empty():
    m = Module.of([g(["a"], ["b"])], {"b"}, {"a"})
    assert compositional(m, Module.empty()) == CompositionCheck(True)
    assert join(m, Module.empty()) == m


def test_two_step_modules_compose():
    p = to_normal_form(parse_theory(read("two_step.tel")))
    m0, m1 = build_module(p, 0), build_module(p, 1)
    assert compositional(m0, m1)
    j = join(m0, m1)
    assert StampedAtom("a", 0) not in j.inputs and StampedAtom("b", 0) not in j.inputs
    assert j.inputs == {StampedAtom.q(2)}


def test_joined_models_combine_side_models():
    rng = random.Random(33)
    checked = 0
    for _ in range(300):
        # m1 defines x, y from input z; m2 defines z, w from inputs x, y
        def lits(pool, k):
            return [GroundLiteral(rng.choice(pool), rng.random() < 0.6) for _ in range(k)]

        r1 = [g(lits(["x", "y"], rng.randint(1, 2)), lits(["x", "y", "z"], rng.randint(0, 2))) for _ in range(2)]
        r2 = [g(lits(["z", "w"], rng.randint(1, 2)), lits(["x", "y", "z", "w"], rng.randint(0, 2))) for _ in range(2)]
        m1 = Module.of(r1, {"z"}, {"x", "y"})
        m2 = Module.of(r2, {"x", "y"}, {"z", "w"})
        if not compositional(m1, m2):
            continue
        checked += 1
        joined = set(stable_models(join(m1, m2)))
        # stable models of each side with the other side's atoms fixed as facts
        combos = set()
        for x1 in _all_subsets(["x", "y"]):
            for x2 in _all_subsets(["z", "w"]):
                facts1 = [g([a]) for a in x2 if a == "z"]
                facts2 = [g([a]) for a in x1]
                s1 = stable_models(LogicProgram.of(r1 + facts1, {"x", "y", "z"}))
                s2 = stable_models(LogicProgram.of(r2 + facts2, {"x", "y", "z", "w"}))
                want1 = frozenset(x1) | ({"z"} & frozenset(x2))
                want2 = frozenset(x2) | frozenset(x1)
                if want1 in s1 and want2 in s2:
                    combos.add(frozenset(x1) | frozenset(x2))
        assert joined == combos
    assert checked > 50


def _all_subsets(items):
    return [frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k)]


def test_scc_against_reachability():
    rng = random.Random(34)
    for _ in range(300):
        nodes = list(range(rng.randint(1, 8)))
        graph = {v: {w for w in nodes if rng.random() < 0.25} for v in nodes}
        comps = strongly_connected_components(graph)
        assert set(comps) == reachability_sccs(graph)
        assert sorted(v for c in comps for v in c) == nodes


def test_dependency_graph_edges():
    p = LogicProgram.of([g(["a", n("c")], ["b", n("d")])])
    graph = positive_dependency_graph(p)
    assert graph["a"] == {"b"} and graph["c"] == set()


def test_emit_text_examples():
    a0, b1 = StampedAtom("a", 0), StampedAtom("b", 1)
    p = LogicProgram.of([g([a0]), g([b1], [a0]), g([], [n(b1)])])
    assert emit_text(p) == "a(0).\nb(1) :- a(0).\n:- not b(1).\n"
    assert emit_text(p, {"length": 1}).startswith("% teltrace ground program\n% length: 1\n")
