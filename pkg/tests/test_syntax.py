import pytest
from hypothesis import given, settings

from strategies import formulas
from teltrace.semantics import sat
from teltrace.syntax import ParseError, desugar, parse_formula, parse_theory, print_formula
from teltrace.syntax.formula import (
    BOT,
    FINAL,
    TOP,
    AlwaysAfter,
    AlwaysBefore,
    And,
    Atom,
    EvBefore,
    Impl,
    Neg,
    Next,
    Prev,
    Release,
    Theory,
    Trigger,
    Until,
    WNext,
    subformulas,
)

a, b = Atom("a"), Atom("b")
PRIMITIVE = {"Atom", "Bot", "And", "Or", "Impl", "Prev", "Since", "Trigger", "Next", "Until", "Release"}


def test_fact():
    assert parse_theory("a.").formulas == (a,)


def test_spelled_listing():
    assert parse_formula("#next^ #always+ ((#previous a) -> b)") == WNext(AlwaysAfter(Impl(Prev(a), b)))


def test_dynamic_directive_with_quote():
    assert parse_theory("#program dynamic.\nb :- 'a.").formulas == (WNext(AlwaysAfter(Impl(Prev(a), b))),)


def test_tel_constraint_under_always():
    t = parse_theory("#program always.\n:- shoot, &tel { <* unloaded & < <? shoot }.")
    body = And(Atom("shoot"), And(AlwaysBefore(Atom("unloaded")), Prev(EvBefore(Atom("shoot")))))
    assert t.formulas == (AlwaysAfter(Impl(body, BOT)),)


def test_final_and_initial_contexts():
    t = parse_theory("#program final.\n:- not b.\n#program initial.\nc.")
    assert t.formulas[0] == AlwaysAfter(Impl(FINAL, Impl(Neg(b), BOT)))
    assert t.formulas[1] == Atom("c")


def test_head_disjunction_and_arguments():
    (f,) = parse_theory("p(a,1) ; q :- r.").formulas
    assert f.left == Atom("r")
    assert {x.name for x in subformulas(f) if isinstance(x, Atom)} == {"p(a,1)", "q", "r"}


def test_alphabet_widening():
    t = parse_theory("a.", alphabet={"z"})
    assert t.alphabet == {"a", "z"}


def test_theory_rejects_foreign_atoms():
    with pytest.raises(ValueError):
        Theory(frozenset({"a"}), (b,))


@pytest.mark.parametrize(
    "text, line, column",
    [("a :- b\nc.", 2, 1), ("#program foo.", 1, 10), ("a :- b'.", 1, 6), ("a &", 1, 4)],
)
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_theory(text)
    assert (e.value.line, e.value.column) == (line, column)


def test_print_examples():
    assert print_formula(a) == "a"
    assert print_formula(WNext(AlwaysAfter(Impl(Prev(a), b)))) == "#next^ #always+ ((#previous a) -> b)"
    assert print_formula(AlwaysBefore(Atom("unloaded"))) == "#always- unloaded"


def test_binary_temporal_right_associative():
    f = parse_formula("a #until b #until a")
    assert f == Until(a, Until(b, a))


def test_desugar_table():
    assert desugar(AlwaysBefore(a)) == Trigger(BOT, a)
    assert desugar(FINAL) == Impl(Next(Impl(BOT, BOT)), BOT)
    assert desugar(a) == a
    assert desugar(AlwaysAfter(a)) == Release(BOT, a)
    assert desugar(TOP) == Impl(BOT, BOT)


@settings(max_examples=300, deadline=None)
@given(formulas)
def test_round_trip(f):
    assert parse_formula(print_formula(f)) == f


@settings(max_examples=200, deadline=None)
@given(formulas)
def test_desugar_primitive_and_idempotent(f):
    g = desugar(f)
    assert {type(x).__name__ for x in subformulas(g)} <= PRIMITIVE
    assert desugar(g) == g


def test_desugar_sound_on_samples():
    from teltrace.generate import random_formula, random_httrace, rng_of

    rng = rng_of(11)
    for _ in range(300):
        f = random_formula(rng, ("a", "b"), 3)
        m = random_httrace(rng, ("a", "b"), rng.randint(0, 3))
        k = rng.randint(0, m.length)
        assert sat(m, k, f, "ab") == sat(m, k, desugar(f), "ab")
