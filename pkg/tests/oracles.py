"""Naive reference implementations used to derive expected values.

Nothing here calls into teltrace's evaluators or solvers; only the formula
classes are shared.  Satisfaction is read off the clauses directly, stable
models of ground programs come from the reduct, and components come from
reachability.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from teltrace.syntax import formula as F


def _states(alphabet, n):
    alphabet = sorted(alphabet)
    subsets = [frozenset(c) for r in range(len(alphabet) + 1) for c in combinations(alphabet, r)]
    return product(subsets, repeat=n + 1)


def _below(t):
    """All here-traces H with H_i ⊆ T_i."""
    options = [[frozenset(c) for r in range(len(s) + 1) for c in combinations(sorted(s), r)] for s in t]
    return product(*options)


def naive_sat(here, there, k, f) -> bool:
    n = len(there) - 1

    @lru_cache(maxsize=None)
    def ev(w, k, f):
        # w: 0 = here, 1 = there
        state = (here, there)[w]
        if isinstance(f, F.Atom):
            return f.name in state[k]
        if isinstance(f, F.Bot):
            return False
        if isinstance(f, F.Top):
            return True
        if isinstance(f, F.Initial):
            return k == 0
        if isinstance(f, F.Final):
            return k == n
        if isinstance(f, F.And):
            return ev(w, k, f.left) and ev(w, k, f.right)
        if isinstance(f, F.Or):
            return ev(w, k, f.left) or ev(w, k, f.right)
        if isinstance(f, F.Impl):
            return all(not ev(v, k, f.left) or ev(v, k, f.right) for v in range(w, 2))
        if isinstance(f, F.Iff):
            return all(ev(v, k, f.left) == ev(v, k, f.right) for v in range(w, 2))
        if isinstance(f, F.Neg):
            return all(not ev(v, k, f.arg) for v in range(w, 2))
        if isinstance(f, F.Prev):
            return k > 0 and ev(w, k - 1, f.arg)
        if isinstance(f, F.WPrev):
            return k == 0 or ev(w, k - 1, f.arg)
        if isinstance(f, F.Next):
            return k < n and ev(w, k + 1, f.arg)
        if isinstance(f, F.WNext):
            return k == n or ev(w, k + 1, f.arg)
        if isinstance(f, F.AlwaysBefore):
            return all(ev(w, i, f.arg) for i in range(k + 1))
        if isinstance(f, F.EvBefore):
            return any(ev(w, i, f.arg) for i in range(k + 1))
        if isinstance(f, F.AlwaysAfter):
            return all(ev(w, i, f.arg) for i in range(k, n + 1))
        if isinstance(f, F.EvAfter):
            return any(ev(w, i, f.arg) for i in range(k, n + 1))
        if isinstance(f, F.Since):
            return any(ev(w, j, f.right) and all(ev(w, i, f.left) for i in range(j + 1, k + 1))
                       for j in range(k + 1))
        if isinstance(f, F.Trigger):
            return all(ev(w, j, f.right) or any(ev(w, i, f.left) for i in range(j + 1, k + 1))
                       for j in range(k + 1))
        if isinstance(f, F.Until):
            return any(ev(w, j, f.right) and all(ev(w, i, f.left) for i in range(k, j))
                       for j in range(k, n + 1))
        if isinstance(f, F.Release):
            return all(ev(w, j, f.right) or any(ev(w, i, f.left) for i in range(k, j))
                       for j in range(k, n + 1))
        raise TypeError(f"unknown node {type(f).__name__}")

    return ev(0, k, f)


def naive_models(formulas, here, there) -> bool:
    return all(naive_sat(here, there, 0, f) for f in formulas)


def naive_tel(formulas, length, alphabet) -> list[tuple[frozenset, ...]]:
    """Temporal stable models as tuples of states, by exhaustive search."""
    formulas = list(formulas)
    out = []
    for t in _states(alphabet, length):
        if not naive_models(formulas, t, t):
            continue
        if any(h != t and naive_models(formulas, h, t) for h in _below(t)):
            continue
        out.append(t)
    return sorted(out, key=lambda t: [sorted(s) for s in t])


# ground programs ------------------------------------------------------------


def naive_stable(rules, atoms) -> list[frozenset]:
    """Reduct-based stable models of rules given as (head, body) literal lists.

    A literal is ``(atom, positive)``.  For a candidate X the reduct drops
    every rule with a negative body literal false in X or a negative head
    literal true in X, then deletes the remaining negative literals; X is
    stable iff it is a minimal model of the reduct.
    """
    atoms = sorted(atoms, key=str)
    out = []
    for r in range(len(atoms) + 1):
        for combo in combinations(atoms, r):
            x = frozenset(combo)
            reduct = []
            for head, body in rules:
                if any(not p and a in x for a, p in body):
                    continue
                if any(not p and a not in x for a, p in head):
                    continue
                reduct.append(([a for a, p in head if p], [a for a, p in body if p]))

            def model(y):
                return all(not set(b) <= y or any(a in y for a in h) for h, b in reduct)

            if not model(x):
                continue
            if any(model(frozenset(sub)) for m in range(len(x)) for sub in combinations(sorted(x, key=str), m)):
                continue
            # subsets of size < |x| cover every proper subset
            out.append(x)
    return out


def reachability_sccs(graph: dict) -> set[frozenset]:
    nodes = list(graph)
    reach = {v: {v} for v in nodes}
    changed = True
    while changed:
        changed = False
        for v in nodes:
            new = set(reach[v])
            for w in reach[v]:
                new |= graph.get(w, set())
                new |= reach.get(w, set())
            if new != reach[v]:
                reach[v] = new
                changed = True
    return {frozenset(w for w in nodes if w in reach[v] and v in reach[w]) for v in nodes}
