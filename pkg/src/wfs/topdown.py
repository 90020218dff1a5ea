"""Top-down search for unfounded atoms of an LP1 Horn program.

All atoms start as singleton pf-sets (potentially false sets). Active
pf-sets of the smallest cardinality try to find a back rule, i.e. a rule
with head inside the set and tail outside it. A set that finds one gets a
``pred`` edge to the set holding the tail and stops being active. Cycles
of ``pred`` edges are glued into larger active sets. The first active set
that runs out of candidate rules is returned: it has no support from
outside, so none of its atoms is derivable. If no active set remains,
every atom is derivable and the empty set is returned.

IN lists are read from the :class:`~wfs.reducts.ShrinkingProgram` in
place. Each IN-list entry is examined at most once per call.
"""

from __future__ import annotations

from typing import Callable, Optional

from .core import NotLp1Error
from .reducts import ShrinkingProgram

UNDEFINED = -2
NIL = -1

Trace = Callable[[dict], None]


class PfPartition:
    """Pf-sets as linked member lists; a set is named by its head atom.

    Heads are always the smallest member. ``head_of`` answers findset in
    constant time, and index ``sentinel`` stands for the pseudo-atom ``s``.
    """

    def __init__(self, n_atoms: int, atoms: list[int]):
        self.sentinel = n_atoms
        self.head_of = list(range(n_atoms + 1))
        self.next_member = [NIL] * n_atoms
        self.last_member = list(range(n_atoms))
        self.cardinality = [1] * (n_atoms + 1)
        self.atoms = atoms

    def members(self, head: int) -> list[int]:
        if head == self.sentinel:
            return []
        out = []
        while head != NIL:
            out.append(head)
            head = self.next_member[head]
        return out

    def merge(self, heads: list[int]) -> int:
        """Glue the sets named by ``heads``; member lists are concatenated
        in ascending head order."""
        heads = sorted(heads)
        root = heads[0]
        head_of, nxt, last, card = self.head_of, self.next_member, self.last_member, self.cardinality
        for h in heads[1:]:
            x = h
            while x != NIL:
                head_of[x] = root
                x = nxt[x]
            nxt[last[root]] = h
            last[root] = last[h]
            card[root] += card[h]
        return root

    def sets(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for a in self.atoms:
            out.setdefault(self.head_of[a], []).append(a)
        return out


class PredGraph:
    """Partial ``pred`` function on pf-sets.

    ``pred_atom[v]`` holds the tail atom of the back rule found for ``v``
    (or the sentinel); the set it points to is resolved through findset,
    so merges redirect incoming edges for free.
    """

    def __init__(self, partition: PfPartition):
        self.partition = partition
        self.pred_atom = [NIL] * (partition.sentinel + 1)

    def pred(self, v: int) -> Optional[int]:
        a = self.pred_atom[v]
        return None if a == NIL else self.partition.head_of[a]

    def set_pred(self, v: int, atom: int) -> None:
        self.pred_atom[v] = atom

    def clear(self, v: int) -> None:
        self.pred_atom[v] = NIL


class ScanState:
    """Per-call cursors into the IN lists plus the growth schedule.

    ``grounded[v]`` marks sets known to hang below {s} in the pred graph;
    they can never join a cycle, so they are not walked.
    """

    def __init__(self, n_atoms: int, active: list[int]):
        self.w = [UNDEFINED] * n_atoms
        self.size = 0
        self.active = active
        self.n_active = len(active)
        self.fresh: list[int] = []
        self.walk_mark = [0] * (n_atoms + 1)
        self.walks = 0
        self.grounded = bytearray(n_atoms + 1)
        self.grounded[n_atoms] = 1


def cycle_contract(part: PfPartition, g: PredGraph, state: ScanState,
                   trace: Optional[Trace] = None) -> list[int]:
    """Contract every ``pred`` cycle and return the active sets of
    cardinality ``state.size`` in ascending head order.

    Any new cycle must pass through a set whose ``pred`` was defined since
    the previous call (and that is not grounded), so only those sets start
    a walk.
    """
    head_of, pred_atom, mark = part.head_of, g.pred_atom, state.walk_mark
    sentinel = part.sentinel
    cycles = []
    epoch = state.walks
    for start in state.fresh:
        state.walks += 1
        stamp = state.walks
        path = []
        x = start
        while True:
            if x == sentinel:
                break
            if mark[x] <= epoch:
                mark[x] = stamp
                path.append(x)
                a = pred_atom[x]
                if a == NIL:
                    break
                x = head_of[a]
            else:
                if mark[x] == stamp:
                    cycles.append(path[path.index(x):])
                break
    state.fresh = []
    active = [v for v in state.active if pred_atom[v] == NIL and head_of[v] == v]
    if cycles:
        cycles.sort(key=min)
        for c in cycles:
            if trace is not None:
                trace({"event": "merge", "members": [m for h in c for m in part.members(h)]})
            root = part.merge(c)
            g.clear(root)
            active.append(root)
            state.n_active += 1
    card, size = part.cardinality, state.size
    state.active = active
    return sorted(v for v in active if card[v] == size)


def false_subset(q: ShrinkingProgram, trace: Optional[Trace] = None,
                 trust_true: bool = False) -> set[int]:
    """Return a nonempty set of underivable atoms of the h-view of ``q``,
    or the empty set when every atom not in F is derivable.

    The atoms considered are those not yet in F. With ``trust_true`` the
    atoms of ``q.current_T`` are taken as derivable without search; the
    solver's states guarantee this. ``q.in_list_inspections`` counts
    IN-list entries examined.
    """
    if not q.lp1:
        raise NotLp1Error("top-down search needs at most one positive body atom per rule")
    atoms = q.alive_atoms()
    if not atoms:
        return set()
    n = q.n_atoms
    part = PfPartition(n, atoms)
    g = PredGraph(part)
    if trust_true and q.current_T:
        in_t = q.in_t
        state = ScanState(n, [a for a in atoms if not in_t[a]])
        state.grounded[:n] = in_t
    else:
        state = ScanState(n, list(atoms))
    head_of, nxt_member = part.head_of, part.next_member
    pred_atom, w, grounded = g.pred_atom, state.w, state.grounded
    in_first, in_next, tail = q.in_first, q.in_next, q.tail
    inspections = 0
    try:
        while state.size < len(atoms):
            if not state.n_active and not state.fresh:
                # no root besides {s} and nothing left to contract
                break
            state.size += 1
            L = cycle_contract(part, g, state, trace)
            for v in L:
                success = False
                u = v
                while u != NIL:
                    r = w[u]
                    r = in_first[u] if r == UNDEFINED else (in_next[r] if r != NIL else NIL)
                    while r != NIL:
                        inspections += 1
                        if head_of[tail[r]] != v:
                            success = True
                            break
                        r = in_next[r]
                    w[u] = r
                    if success:
                        break
                    u = nxt_member[u]
                if not success:
                    found = set(part.members(v))
                    if trace is not None:
                        trace({"event": "report", "v": found})
                    return found
                pred_atom[v] = tail[r]
                state.n_active -= 1
                x = head_of[tail[r]]
                if grounded[x]:
                    grounded[v] = 1
                else:
                    state.fresh.append(v)
                if trace is not None:
                    trace({
                        "event": "back_edge",
                        "from": None if x == n else part.members(x),
                        "to": part.members(v),
                        "rule": r,
                    })
        return set()
    finally:
        q.in_list_inspections += inspections
