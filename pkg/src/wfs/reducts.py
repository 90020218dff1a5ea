"""Reducts, restrictions and the Gelfond-Lifschitz operator.

The batch functions here return fresh values and double as references
for :class:`ShrinkingProgram`, the incremental form of the restriction
``P_{F,T}`` that the solver keeps alive across iterations.

Complements are always taken with respect to all atoms of the original
program.
"""

from __future__ import annotations

from itertools import chain
from typing import Iterable, Iterator

import numpy as np

from .core import Program
from .horn import DerivationEngine, HornProgram, group_by, least_model


def h_reduct(p: Program) -> HornProgram:
    """Erase every negative body literal."""
    return HornProgram(((r.head, r.pos_body) for r in p.rules), p.n_atoms)


def rule_arrays(p: Program) -> dict:
    """Flat numpy views of the rules of ``p``, cached on the program.

    ``pos_atoms[j]`` is the j-th positive body occurrence in rule order and
    ``pos_rules[j]`` the rule it belongs to; likewise for ``neg_*``.
    """
    arrays = p._cache.get("arrays")
    if arrays is None:
        rules = p.rules
        m = len(rules)
        pos_len = np.fromiter((len(r.pos_body) for r in rules), np.int64, m)
        neg_len = np.fromiter((len(r.neg_body) for r in rules), np.int64, m)
        rule_ids = np.arange(m, dtype=np.int64)
        arrays = {
            "heads": np.fromiter((r.head for r in rules), np.int64, m),
            "pos_len": pos_len,
            "neg_len": neg_len,
            "pos_atoms": np.fromiter(chain.from_iterable(r.pos_body for r in rules), np.int64),
            "neg_atoms": np.fromiter(chain.from_iterable(r.neg_body for r in rules), np.int64),
            "pos_rules": np.repeat(rule_ids, pos_len),
            "neg_rules": np.repeat(rule_ids, neg_len),
        }
        p._cache["arrays"] = arrays
    return arrays


def extended_horn(p: Program) -> HornProgram:
    """Read ``p`` as a Horn program over atoms plus ``not(a)`` literals.

    ``not(a)`` is atom ``n_atoms + a``. Cached on the program.
    """
    q = p._cache.get("extended_horn")
    if q is None:
        n = p.n_atoms
        a = rule_arrays(p)

        def make_rules():
            return [(r.head, r.pos_body + tuple([n + b for b in r.neg_body])) for r in p.rules]

        q = HornProgram.from_arrays(
            a["heads"],
            a["pos_len"] + a["neg_len"],
            np.concatenate((a["pos_atoms"], a["neg_atoms"] + n)),
            np.concatenate((a["pos_rules"], a["neg_rules"])),
            2 * n,
            make_rules,
        )
        p._cache["extended_horn"] = q
    return q


def reduct_m(p: Program, m: Iterable[int]) -> Program:
    """Drop rules containing ``not(a)`` for some ``a`` in ``m``."""
    m = set(m)
    return Program((r for r in p.rules if not m.intersection(r.neg_body)), p.names)


def gl(p: Program, m: Iterable[int], engine_out: list | None = None) -> set[int]:
    """Gelfond-Lifschitz operator: least model of the reduct of ``p`` by ``m``.

    Evaluated as the original-alphabet part of the least model of ``p``
    read as a Horn program, with ``not(a)`` asserted for every ``a`` outside
    ``m``.
    """
    n = p.n_atoms
    m = set(m)
    engine = DerivationEngine(extended_horn(p))
    derived = engine.assert_facts(n + a for a in range(n) if a not in m)
    if engine_out is not None:
        engine_out.append(engine)
    return {a for a in derived if a < n}


def gl_by_reduct(p: Program, m: Iterable[int]) -> set[int]:
    """The same operator computed as ``LM((P_M)^h)``."""
    return least_model(h_reduct(reduct_m(p, m)))


def complement(p: Program, atoms: Iterable[int]) -> set[int]:
    return set(range(p.n_atoms)).difference(atoms)


def _without(p: Program, f: set, t: set) -> Program:
    return Program(
        (
            r
            for r in p.rules
            if r.head not in f and not f.intersection(r.pos_body) and not t.intersection(r.neg_body)
        ),
        p.names,
    )


def restrict(p: Program, f: Iterable[int], t: Iterable[int]) -> Program:
    """``P_{F,T}``: drop rules with head in F, a positive body atom in F,
    or a negative literal ``not(a)`` with ``a`` in T."""
    f, t = set(f), set(t)
    if f & t:
        raise ValueError("F and T must be disjoint")
    return _without(p, f, t)


def op_A(p: Program, f: Iterable[int]) -> set[int]:
    return complement(p, gl(p, gl(p, complement(p, f))))


def op_B(p: Program, f: Iterable[int]) -> set[int]:
    # for arbitrary F, T = GL(complement F) may meet F; the deletion rules still apply
    f = set(f)
    t = gl(p, complement(p, f))
    return complement(p, least_model(h_reduct(_without(p, f, t))))


class ShrinkingProgram:
    """``P_{F,T}`` maintained under growing F and T.

    For every atom ``a`` not in F, ``IN(a)`` is a doubly linked list (by rule
    index, in source order) of the alive rules with head ``a``. The tail of
    a rule is its first positive body atom, or the sentinel ``n_atoms``
    when the positive body is empty.

    ``in_list_inspections`` is incremented by the top-down procedure each
    time it looks at an IN-list entry.
    """

    def __init__(self, p: Program):
        n = p.n_atoms
        self.program = p
        self.n_atoms = n
        self.sentinel = n
        m = len(p.rules)
        self.alive = bytearray(b"\x01") * m
        self.n_alive = m
        self.in_f = bytearray(n)
        self.in_t = bytearray(n)
        self.current_F: set[int] = set()
        self.current_T: set[int] = set()
        self.rules_deleted = 0
        self.in_list_inspections = 0

        a = rule_arrays(p)
        heads, pos_len = a["heads"], a["pos_len"]
        self.lp1 = bool(m == 0 or pos_len.max() <= 1)
        # tail: first positive body atom, or the sentinel for an empty h-body
        starts = np.cumsum(pos_len) - pos_len
        tail = np.full(m, n, dtype=np.int64)
        has_pos = pos_len > 0
        tail[has_pos] = a["pos_atoms"][starts[has_pos]]
        # IN lists: rules of each head linked in source order
        first = np.full(n, -1, dtype=np.int64)
        nxt = np.full(m, -1, dtype=np.int64)
        prev = np.full(m, -1, dtype=np.int64)
        if m:
            order = np.argsort(heads, kind="stable")
            hs = heads[order]
            same = hs[1:] == hs[:-1]
            nxt[order[:-1][same]] = order[1:][same]
            prev[order[1:][same]] = order[:-1][same]
            group_start = np.concatenate(([True], ~same))
            first[hs[group_start]] = order[group_start]
        self.tail = tail.tolist()
        self.in_first = first.tolist()
        self.in_next = nxt.tolist()
        self.in_prev = prev.tolist()
        self.pos_occ = group_by(n, a["pos_atoms"], a["pos_rules"])
        self.neg_occ = group_by(n, a["neg_atoms"], a["neg_rules"])

    def _kill(self, r: int) -> None:
        self.alive[r] = 0
        self.n_alive -= 1
        self.rules_deleted += 1
        nxt, prev = self.in_next, self.in_prev
        j, k = prev[r], nxt[r]
        if j < 0:
            self.in_first[self.program.rules[r].head] = k
        else:
            nxt[j] = k
        if k >= 0:
            prev[k] = j

    def apply(self, delta_f: Iterable[int], delta_t: Iterable[int]) -> None:
        """Move to ``P_{F+dF, T+dT}`` by deleting the affected rules in place."""
        delta_f, delta_t = set(delta_f), set(delta_t)
        in_f, in_t, alive = self.in_f, self.in_t, self.alive
        if delta_f & delta_t or any(in_f[a] or in_t[a] for a in delta_f | delta_t):
            raise ValueError("increments must be disjoint from each other and from F and T")
        for a in delta_f:
            in_f[a] = 1
        for a in delta_t:
            in_t[a] = 1
        self.current_F |= delta_f
        self.current_T |= delta_t
        first, nxt = self.in_first, self.in_next
        pos_off, pos_flat = self.pos_occ
        neg_off, neg_flat = self.neg_occ
        for a in delta_f:
            r = first[a]
            while r >= 0:
                k = nxt[r]
                self._kill(r)
                r = k
            lo, hi = pos_off[a], pos_off[a + 1]
            if lo != hi:
                for r in pos_flat[lo:hi]:
                    if alive[r]:
                        self._kill(r)
        for a in delta_t:
            lo, hi = neg_off[a], neg_off[a + 1]
            if lo != hi:
                for r in neg_flat[lo:hi]:
                    if alive[r]:
                        self._kill(r)

    # h-view of the alive rules

    def alive_rules(self) -> Iterator[int]:
        return (i for i, a in enumerate(self.alive) if a)

    def alive_atoms(self) -> list[int]:
        """Atoms not in F, ascending."""
        return [a for a, dead in enumerate(self.in_f) if not dead]

    def in_list(self, atom: int) -> list[int]:
        """Rule indices on ``IN(atom)`` in list order."""
        out = []
        r = self.in_first[atom]
        while r >= 0:
            out.append(r)
            r = self.in_next[r]
        return out

    def in_tails(self, atom: int) -> list[int]:
        """Tails on ``IN(atom)``; the sentinel appears as ``n_atoms``."""
        return [self.tail[r] for r in self.in_list(atom)]

    def horn_view(self) -> HornProgram:
        """Materialized ``(P_{F,T})^h``; for inspection only."""
        rules = self.program.rules
        return HornProgram(((rules[i].head, rules[i].pos_body) for i in self.alive_rules()), self.n_atoms)

    def alive_program(self) -> Program:
        rules = self.program.rules
        return Program((rules[i] for i in self.alive_rules()), self.program.names)

    def least_model(self) -> set[int]:
        """Least model of the h-view, computed bottom-up in O(size)."""
        rules, alive = self.program.rules, self.alive
        pos_off, pos_flat = self.pos_occ
        counters: dict[int, int] = {}
        stack = []
        model: set[int] = set()
        for i in self.alive_rules():
            k = len(rules[i].pos_body)
            counters[i] = k
            if k == 0:
                stack.append(rules[i].head)
        while stack:
            a = stack.pop()
            if a in model:
                continue
            model.add(a)
            for r in pos_flat[pos_off[a]:pos_off[a + 1]]:
                if alive[r]:
                    counters[r] -= 1
                    if counters[r] == 0:
                        stack.append(rules[r].head)
        return model


def shrink_init(p: Program) -> ShrinkingProgram:
    return ShrinkingProgram(p)


def shrink_apply(sp: ShrinkingProgram, delta_f: Iterable[int], delta_t: Iterable[int]) -> None:
    sp.apply(delta_f, delta_t)
