"""Linear-time least models of Horn programs.

Rule bodies are counted down as their atoms become derived (the
Dowling-Gallier scheme). :class:`DerivationEngine` keeps that state alive
so facts can be asserted in batches; after each batch the rules whose
head is still underived, with derived atoms dropped from their bodies,
form the residual program.
"""

from __future__ import annotations

from collections import deque
from itertools import chain
from typing import Iterable, Sequence

import numpy as np


def group_by(n: int, keys: Sequence[int], values: Sequence[int]) -> tuple[list[int], list[int]]:
    """Compressed grouping of ``values`` by integer key in ``range(n)``.

    Group ``k`` is ``flat[offsets[k]:offsets[k + 1]]``, in input order.
    """
    keys = np.asarray(keys, dtype=np.int64)
    if keys.size == 0:
        return [0] * (n + 1), []
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(keys, minlength=n), out=offsets[1:])
    order = np.argsort(keys, kind="stable")
    flat = np.asarray(values, dtype=np.int64)[order]
    return offsets.tolist(), flat.tolist()


class HornProgram:
    """Negation-free rules ``(head, body)`` over atoms ``0 .. alphabet_size - 1``."""

    def __init__(self, rules: Iterable[tuple[int, Sequence[int]]], alphabet_size: int):
        self._rules: list | None = [(h, tuple(b)) for h, b in rules]
        self._make_rules = None
        self.alphabet_size = alphabet_size
        self._arrays = None
        self._index = None

    @classmethod
    def from_arrays(cls, heads: np.ndarray, lengths: np.ndarray, occ_atoms: np.ndarray,
                    occ_rules: np.ndarray, alphabet_size: int, make_rules) -> "HornProgram":
        """Build from flat occurrence arrays; ``make_rules()`` materializes
        the rule list only if someone asks for it."""
        q = cls((), alphabet_size)
        q._rules = None
        q._make_rules = make_rules
        q._arrays = (heads, lengths, occ_atoms, occ_rules)
        return q

    @property
    def rules(self) -> list[tuple[int, tuple[int, ...]]]:
        if self._rules is None:
            self._rules = self._make_rules()
        return self._rules

    def __len__(self) -> int:
        return len(self._arrays[0]) if self._rules is None else len(self._rules)

    @property
    def size(self) -> int:
        if self._rules is None:
            return int(len(self._arrays[0]) + self._arrays[1].sum())
        return sum(1 + len(b) for _, b in self._rules)

    def arrays(self):
        if self._arrays is None:
            rules = self._rules
            m = len(rules)
            heads = np.fromiter((h for h, _ in rules), np.int64, m)
            lengths = np.fromiter((len(b) for _, b in rules), np.int64, m)
            occ_atoms = np.fromiter(chain.from_iterable(b for _, b in rules), np.int64)
            occ_rules = np.repeat(np.arange(m, dtype=np.int64), lengths)
            self._arrays = (heads, lengths, occ_atoms, occ_rules)
        return self._arrays

    def index(self):
        """Static rule index shared by every engine built on this program."""
        if self._index is None:
            heads, lengths, occ_atoms, occ_rules = self.arrays()
            live_heads = np.bincount(heads, minlength=self.alphabet_size)
            facts = heads[lengths == 0]
            self._index = (
                heads.tolist(),
                lengths.tolist(),
                group_by(self.alphabet_size, occ_atoms, occ_rules),
                live_heads.tolist(),
                facts.tolist(),
            )
        return self._index

    def __repr__(self) -> str:
        return f"HornProgram(rules={len(self)}, alphabet_size={self.alphabet_size})"


class DerivationEngine:
    """Incremental least-model state of a Horn program.

    ``counters[r]`` is the number of body occurrences of rule ``r`` not yet
    derived; duplicate body atoms are counted once per occurrence.
    Atoms heading empty-bodied rules are queued at construction and
    propagated by the first :meth:`assert_facts` call.
    """

    def __init__(self, q: HornProgram):
        heads, counters, watch, live_heads, facts = q.index()
        self.program = q
        self.heads = heads
        self.watch_offsets, self.watch = watch
        self.counters = list(counters)
        self.derived = bytearray(q.alphabet_size)
        self.live_heads = list(live_heads)
        self.agenda: deque[int] = deque()
        self._pending: list[int] = []
        self.visits = len(heads)
        for h in facts:
            self._push(h)

    def _push(self, atom: int) -> None:
        if not self.derived[atom]:
            self.derived[atom] = 1
            self.live_heads[atom] = 0
            self._pending.append(atom)
            self.agenda.append(atom)

    def assert_facts(self, facts: Iterable[int]) -> set[int]:
        """Add ``facts`` and propagate; return the atoms newly derived."""
        for a in sorted(facts):
            self._push(a)
        derived, counters, heads = self.derived, self.counters, self.heads
        watch, offsets = self.watch, self.watch_offsets
        live_heads, pending, agenda = self.live_heads, self._pending, self.agenda
        visits = 0
        popleft = agenda.popleft
        while agenda:
            a = popleft()
            occ = watch[offsets[a]:offsets[a + 1]]
            visits += len(occ)
            for r in occ:
                c = counters[r] - 1
                counters[r] = c
                if c == 0:
                    h = heads[r]
                    if not derived[h]:
                        derived[h] = 1
                        live_heads[h] = 0
                        pending.append(h)
                        agenda.append(h)
        self.visits += visits
        new = set(pending)
        pending.clear()
        return new

    def derived_set(self) -> set[int]:
        return {a for a, d in enumerate(self.derived) if d}

    def is_derived(self, atom: int) -> bool:
        return bool(self.derived[atom])

    def residual(self) -> HornProgram:
        """Materialize res(R): live rules with derived atoms removed from bodies.

        Only meant for inspection and tests; the solver never builds it.
        """
        derived = self.derived
        rules = [
            (h, [b for b in body if not derived[b]])
            for h, body in self.program.rules
            if not derived[h]
        ]
        return HornProgram(rules, self.program.alphabet_size)


def least_model(q: HornProgram) -> set[int]:
    return DerivationEngine(q).assert_facts(())


def engine_init(q: HornProgram) -> DerivationEngine:
    return DerivationEngine(q)


def assert_facts(engine: DerivationEngine, facts: Iterable[int]) -> set[int]:
    return engine.assert_facts(facts)
