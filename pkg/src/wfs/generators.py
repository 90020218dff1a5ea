"""Deterministic LP1 program families for checks and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import Program, ProgramBuilder

FAMILIES = ("chain", "pos_loop_chain", "guarded_chain", "ballast", "random_lp1", "paper_example")
ALIASES = {"guarded_chain+ballast": "ballast"}

# rules of the worked example, heads with several rules listed so that
# their tails appear in alphabetical order
PAPER_EXAMPLE = """\
a.
b :- a.
a :- c.
c :- a.
a :- e.
d :- e.
f :- d.
e :- f.
d :- f.
e :- g.
g :- j.
j :- g.
i :- j.
j :- h.
k :- h.
k :- j.
h :- k.
"""


@dataclass
class GeneratorSpec:
    family: str
    n: int = 0
    extra: dict = field(default_factory=dict)


def chain(n: int) -> Program:
    """a1. and a(i+1) :- a(i): every atom true."""
    if n < 1:
        raise ValueError("chain needs n >= 1")
    b = ProgramBuilder()
    b.add("a1")
    for i in range(1, n):
        b.add(f"a{i + 1}", [f"a{i}"])
    return b.build()


def pos_loop_chain(n: int) -> Program:
    """a(i) :- a(i+1) closed into a loop by a(n) :- a1: every atom false."""
    if n < 1:
        raise ValueError("pos_loop_chain needs n >= 1")
    b = ProgramBuilder()
    for i in range(1, n):
        b.add(f"a{i}", [f"a{i + 1}"])
    b.add(f"a{n}", ["a1"])
    return b.build()


def _guarded_chain(b: ProgramBuilder, n: int) -> None:
    for i in range(1, n + 1):
        b.add(f"b{i}", [f"b{i}"])
        if i >= 2:
            b.add(f"b{i}", [], [f"c{i - 1}"])
        b.add(f"c{i}", [], [f"b{i}"])


def guarded_chain(n: int) -> Program:
    """Each b(i) is a positive self-loop also supported by not c(i-1), and
    c(i) :- not b(i). Resolving b(i) needs c(i-1), so alternation takes
    n + 1 rounds. Final F = {b(i)}, T = {c(i)}."""
    if n < 1:
        raise ValueError("guarded_chain needs n >= 1")
    b = ProgramBuilder()
    _guarded_chain(b, n)
    return b.build()


def ballast(n: int, k: int | None = None) -> Program:
    """guarded_chain(n) plus facts q1..qk and p(i) :- q(j) for every i <= n, j <= k.

    The n*k ballast rules are all true from the start; they inflate the
    program size without adding atoms beyond n + k.
    """
    k = n if k is None else k
    if n < 1 or k < 1:
        raise ValueError("ballast needs n >= 1 and k >= 1")
    b = ProgramBuilder()
    _guarded_chain(b, n)
    for j in range(1, k + 1):
        b.add(f"q{j}")
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            b.add(f"p{i}", [f"q{j}"])
    return b.build()


def random_lp1(n: int, m: int, p_neg: float, seed: int) -> Program:
    """``m`` rules over atoms x0..x(n-1): uniform head, one uniform positive
    body atom with probability 1/2, and every atom other than that positive
    atom added as a negative literal with probability ``p_neg``."""
    if n < 1 or m < 0 or not 0.0 <= p_neg <= 1.0:
        raise ValueError("random_lp1 needs n >= 1, m >= 0 and 0 <= p_neg <= 1")
    rng = random.Random(seed)
    b = ProgramBuilder()
    names = [f"x{i}" for i in range(n)]
    for _ in range(m):
        head = rng.randrange(n)
        pos = [rng.randrange(n)] if rng.random() < 0.5 else []
        neg = [names[a] for a in range(n) if (not pos or a != pos[0]) and rng.random() < p_neg]
        b.add(names[head], [names[a] for a in pos], neg)
    return b.build()


def paper_example() -> Program:
    from .textio import parse

    return parse(PAPER_EXAMPLE)


def generate(spec: GeneratorSpec) -> Program:
    family = ALIASES.get(spec.family, spec.family)
    extra = spec.extra
    if family == "chain":
        return chain(spec.n)
    if family == "pos_loop_chain":
        return pos_loop_chain(spec.n)
    if family == "guarded_chain":
        return guarded_chain(spec.n)
    if family == "ballast":
        return ballast(spec.n, extra.get("k"))
    if family == "random_lp1":
        return random_lp1(
            spec.n, extra.get("m", 4 * spec.n), extra.get("p_neg", 0.2), extra.get("seed", 0)
        )
    if family == "paper_example":
        return paper_example()
    raise ValueError(f"unknown family {spec.family!r}")
