"""Interned propositional normal programs and well-founded results."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class NotLp1Error(ValueError):
    """Raised when a procedure restricted to LP1 programs receives a rule
    with two or more positive body atoms."""


class Rule(NamedTuple):
    head: int
    pos_body: tuple[int, ...] = ()
    neg_body: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return 1 + len(self.pos_body) + len(self.neg_body)


class Program:
    """A finite propositional normal logic program.

    Atoms are dense integers ``0 .. n_atoms - 1``; ``names[i]`` is the
    source name of atom ``i``. Instances are treated as immutable once
    built, so derived structures may be cached on them.
    """

    def __init__(self, rules: Iterable[Rule] = (), names: Sequence[str] = ()):
        self.rules: tuple[Rule, ...] = tuple(rules)
        self.names: tuple[str, ...] = tuple(names)
        self.atom_table: dict[str, int] = {name: i for i, name in enumerate(self.names)}
        if len(self.atom_table) != len(self.names):
            raise ValueError("duplicate atom names")
        n = len(self.names)
        size = 0
        for r in self.rules:
            if not 0 <= r.head < n or any(not 0 <= a < n for a in r.pos_body + r.neg_body):
                raise ValueError(f"rule {r} refers to an atom outside the table")
            size += r.size
        self.size = size
        self._cache: dict = {}

    @classmethod
    def from_rules(cls, rules: Iterable[tuple[str, Sequence[str], Sequence[str]]]) -> "Program":
        """Build from ``(head, positive_names, negative_names)`` triples."""
        builder = ProgramBuilder()
        for head, pos, neg in rules:
            builder.add(head, pos, neg)
        return builder.build()

    @property
    def n_atoms(self) -> int:
        return len(self.names)

    def atom(self, name: str) -> int:
        return self.atom_table[name]

    def name(self, atom: int) -> str:
        return self.names[atom]

    def ids(self, names: Iterable[str]) -> set[int]:
        return {self.atom_table[x] for x in names}

    def names_of(self, atoms: Iterable[int]) -> list[str]:
        return sorted(self.names[a] for a in atoms)

    def __len__(self) -> int:
        return len(self.rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self.rules == other.rules and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.rules, self.names))

    def __repr__(self) -> str:
        return f"Program(rules={len(self.rules)}, atoms={self.n_atoms}, size={self.size})"


class ProgramBuilder:
    """Incrementally interns atoms and collects rules.

    Atoms are numbered in first-occurrence order, reading each rule as
    head, then positive body, then negative body.
    """

    def __init__(self) -> None:
        self.names: list[str] = []
        self.table: dict[str, int] = {}
        self.rules: list[Rule] = []

    def intern(self, name: str) -> int:
        idx = self.table.get(name)
        if idx is None:
            idx = self.table[name] = len(self.names)
            self.names.append(name)
        return idx

    def add(self, head: str, pos: Sequence[str] = (), neg: Sequence[str] = ()) -> Rule:
        intern = self.intern
        rule = Rule(intern(head), tuple(intern(a) for a in pos), tuple(intern(a) for a in neg))
        self.rules.append(rule)
        return rule

    def build(self) -> Program:
        return Program(self.rules, self.names)


@dataclass(frozen=True)
class WfsResult:
    """Three-valued partition of the atoms of a program."""

    true_set: frozenset[int]
    false_set: frozenset[int]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.true_set & self.false_set:
            raise ValueError("an atom cannot be both true and false")

    @classmethod
    def of(cls, program: Program, true_set: Iterable[int], false_set: Iterable[int]) -> "WfsResult":
        return cls(frozenset(true_set), frozenset(false_set), program.names)

    @property
    def unknown_set(self) -> frozenset[int]:
        return frozenset(range(len(self.names))) - self.true_set - self.false_set

    def named(self) -> dict[str, list[str]]:
        """Sorted atom names for each truth value."""
        def sort(atoms):
            return sorted(self.names[a] for a in atoms)

        return {
            "true": sort(self.true_set),
            "false": sort(self.false_set),
            "unknown": sort(self.unknown_set),
        }


def is_lp1(p: Program) -> bool:
    """True iff every rule has at most one positive body atom."""
    return all(len(r.pos_body) <= 1 for r in p.rules)


def atoms_of(p: Program) -> set[int]:
    return set(range(p.n_atoms))
