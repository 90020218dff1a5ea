"""Naive reference semantics used as ground truth by the tests.

Nothing here touches the counter-based engine or the reduct machinery:
least models come from repeated full passes over the rules, and the
well-founded model from iterating the squared Gelfond-Lifschitz operator
on explicitly built reducts. Quadratic or worse on purpose.
"""

from __future__ import annotations

from typing import Iterable

from .core import Program, WfsResult
from .horn import HornProgram


def naive_lm(q: HornProgram) -> set[int]:
    model: set[int] = set()
    changed = True
    while changed:
        changed = False
        for head, body in q.rules:
            if head not in model and all(b in model for b in body):
                model.add(head)
                changed = True
    return model


def naive_gl(p: Program, m: Iterable[int]) -> set[int]:
    m = set(m)
    reduct = [(r.head, r.pos_body) for r in p.rules if not any(a in m for a in r.neg_body)]
    return naive_lm(HornProgram(reduct, p.n_atoms))


def naive_wfs(p: Program) -> WfsResult:
    t: set[int] = set()
    while True:
        nxt = naive_gl(p, naive_gl(p, t))
        if nxt == t:
            break
        t = nxt
    f = set(range(p.n_atoms)) - naive_gl(p, t)
    return WfsResult.of(p, t, f)


def naive_fixpoint_trace(p: Program) -> list[set[int]]:
    """Successive iterates ``GL^2(...)`` from the empty set up to T_wfs."""
    out = [set()]
    while True:
        nxt = naive_gl(p, naive_gl(p, out[-1]))
        if nxt == out[-1]:
            return out
        out.append(nxt)


def check_unfounded(rules: Iterable[tuple[int, tuple[int, ...]]], v: Iterable[int]) -> bool:
    """True iff every rule with head in ``v`` has a nonempty body lying in ``v``.

    ``rules`` are Horn rules ``(head, body)``, e.g. ``HornProgram.rules``.
    """
    v = set(v)
    for head, body in rules:
        if head in v and (not body or not all(b in v for b in body)):
            return False
    return True
