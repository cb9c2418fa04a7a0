"""Hypothesis strategies for formulas and traces."""

from hypothesis import strategies as st

from teltrace.semantics import HTTrace, Trace
from teltrace.syntax import formula as F

ATOMS = ("a", "b")

leaves = st.sampled_from([F.Atom("a"), F.Atom("b"), F.TOP, F.BOT, F.INITIAL, F.FINAL])


def _extend(children):
    unary = st.sampled_from([F.Neg, F.Prev, F.WPrev, F.Next, F.WNext, F.AlwaysBefore, F.EvBefore,
                             F.AlwaysAfter, F.EvAfter])
    binary = st.sampled_from([F.And, F.Or, F.Impl, F.Iff, F.Since, F.Trigger, F.Until, F.Release])
    return st.one_of(
        st.builds(lambda c, x: c(x), unary, children),
        st.builds(lambda c, x, y: c(x, y), binary, children, children),
    )


formulas = st.recursive(leaves, _extend, max_leaves=8)


def _free_extend(children):
    unary = st.sampled_from([F.Prev, F.WPrev, F.Next, F.WNext, F.AlwaysBefore, F.EvBefore,
                             F.AlwaysAfter, F.EvAfter])
    binary = st.sampled_from([F.And, F.Or, F.Since, F.Trigger, F.Until, F.Release])
    return st.one_of(
        st.builds(lambda c, x: c(x), unary, children),
        st.builds(lambda c, x, y: c(x, y), binary, children, children),
    )


implication_free = st.recursive(st.sampled_from([F.Atom("a"), F.Atom("b"), F.TOP, F.BOT]), _free_extend,
                                max_leaves=6)

states = st.frozensets(st.sampled_from(ATOMS))


@st.composite
def httraces(draw, max_length=3):
    n = draw(st.integers(0, max_length))
    there = [draw(states) for _ in range(n + 1)]
    here = [frozenset(a for a in s if draw(st.booleans())) for s in there]
    return HTTrace(Trace(tuple(here)), Trace(tuple(there)))
