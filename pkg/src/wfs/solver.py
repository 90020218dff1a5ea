"""Alternating-fixpoint solvers for the well-founded semantics.

``solve_vg`` recomputes both halves of every alternation from scratch.
``solve_alg2`` grows F monotonically with the progressive operator B.
``solve_alg3`` is the incremental template: one derivation engine over
the extended alphabet accumulates T, a :class:`ShrinkingProgram` tracks the
restricted program, and a pluggable ``delta_w`` picks new false atoms.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from .core import NotLp1Error, Program, WfsResult, is_lp1
from .horn import DerivationEngine, least_model
from .reducts import ShrinkingProgram, complement, extended_horn, h_reduct, restrict
from .topdown import Trace, false_subset

DeltaWPlug = Callable[[set, ShrinkingProgram], set]


@dataclass
class SolveStats:
    iterations: int = 0
    in_list_inspections: int = 0
    rules_deleted: int = 0
    rule_visits: int = 0
    wall_time: float = 0.0

    @property
    def work(self) -> int:
        """Primary work counter: IN-list inspections when the top-down plug
        ran, rule visits of the bottom-up least-model passes otherwise."""
        return self.in_list_inspections or self.rule_visits


def _gl_counted(p: Program, m: set, stats: SolveStats) -> set[int]:
    n = p.n_atoms
    engine = DerivationEngine(extended_horn(p))
    derived = engine.assert_facts(n + a for a in range(n) if a not in m)
    stats.rule_visits += engine.visits
    return {a for a in derived if a < n}


def solve_vg(p: Program, stats: Optional[SolveStats] = None,
             trace: Optional[Trace] = None) -> WfsResult:
    """Van Gelder's alternating fixpoint; T and F are recomputed each pass."""
    stats = stats if stats is not None else SolveStats()
    start = time.perf_counter()
    f: set[int] = set()
    t: set[int] = set()
    while True:
        stats.iterations += 1
        new_t = _gl_counted(p, complement(p, f), stats)
        new_f = complement(p, _gl_counted(p, new_t, stats))
        if trace is not None:
            trace({"event": "iter", "i": stats.iterations, "dt": new_t - t, "df": new_f - f})
        t = new_t
        if new_f == f:
            break
        f = new_f
    stats.wall_time = time.perf_counter() - start
    return WfsResult.of(p, t, f)


def solve_alg2(p: Program, stats: Optional[SolveStats] = None,
               trace: Optional[Trace] = None) -> WfsResult:
    """Iterate B from the empty set: F only ever grows."""
    stats = stats if stats is not None else SolveStats()
    start = time.perf_counter()
    f: set[int] = set()
    t: set[int] = set()
    while True:
        stats.iterations += 1
        new_t = _gl_counted(p, complement(p, f), stats)
        q = h_reduct(restrict(p, f, new_t))
        engine = DerivationEngine(q)
        model = engine.assert_facts(())
        stats.rule_visits += engine.visits
        delta_f = complement(p, f) - model
        if trace is not None:
            trace({"event": "iter", "i": stats.iterations, "dt": new_t - t, "df": delta_f})
        t = new_t
        if not delta_f:
            break
        f |= delta_f
    stats.wall_time = time.perf_counter() - start
    return WfsResult.of(p, t, f)


def delta_w_full(f: set, q: ShrinkingProgram) -> set[int]:
    """Every atom outside F that the restricted program cannot derive."""
    model = q.least_model()
    return {a for a in q.alive_atoms() if a not in model}


def delta_w_topdown(f: set, q: ShrinkingProgram) -> set[int]:
    return false_subset(q, trust_true=True)


delta_w_topdown.requires_lp1 = True


def solve_alg3(p: Program, plug: DeltaWPlug = delta_w_topdown,
               trace: Optional[Trace] = None) -> tuple[WfsResult, SolveStats]:
    """Incremental alternating fixpoint with a pluggable false-atom step.

    ``plug(F, Q)`` must return a subset of the atoms outside F that the
    h-view ``Q`` cannot derive, and must return the empty set only when
    there are none.
    """
    stats = SolveStats()
    start = time.perf_counter()
    q = ShrinkingProgram(p)
    if getattr(plug, "requires_lp1", False) and not q.lp1:
        raise NotLp1Error("program has a rule with two or more positive body atoms")
    n = p.n_atoms
    engine = DerivationEngine(extended_horn(p))
    t: set[int] = set()
    f: set[int] = set()
    delta_f: set[int] = set()
    while True:
        stats.iterations += 1
        delta_t = {a for a in engine.assert_facts(n + a for a in delta_f) if a < n}
        t |= delta_t
        q.apply(delta_f, delta_t)
        delta_f = plug(f, q)
        if trace is not None:
            trace({"event": "iter", "i": stats.iterations, "dt": delta_t, "df": delta_f})
        if not delta_f:
            break
        f |= delta_f
    stats.wall_time = time.perf_counter() - start
    stats.in_list_inspections = q.in_list_inspections
    stats.rules_deleted = q.rules_deleted
    stats.rule_visits = engine.visits
    return WfsResult.of(p, t, f), stats


ALGORITHMS = ("vg", "alg2", "topdown")


def solve(p: Program, algorithm: str = "topdown", fallback: bool = False,
          trace: Optional[Trace] = None) -> tuple[WfsResult, SolveStats]:
    """Run one of the solvers by name.

    With ``fallback`` a non-LP1 program sent to ``topdown`` is solved with
    the bottom-up false-atom step instead of raising :class:`NotLp1Error`.
    """
    if algorithm == "vg":
        stats = SolveStats()
        return solve_vg(p, stats, trace), stats
    if algorithm == "alg2":
        stats = SolveStats()
        return solve_alg2(p, stats, trace), stats
    if algorithm == "topdown":
        if fallback and not is_lp1(p):
            return solve_alg3(p, delta_w_full, trace)
        if trace is None:
            return solve_alg3(p, delta_w_topdown)

        def plug(f, q):
            return false_subset(q, trace, trust_true=True)

        plug.requires_lp1 = True
        return solve_alg3(p, plug, trace)
    raise ValueError(f"unknown algorithm {algorithm!r}")
