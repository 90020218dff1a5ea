import random

from hypothesis import strategies as st

from wfs.core import Program, Rule


def random_program(rng: random.Random, n_atoms: int, n_rules: int, max_pos: int = 3,
                   max_neg: int = 3, p_fact: float = 0.15) -> Program:
    """Random normal program over ``x0..x{n-1}``; every atom is declared."""
    rules = []
    for _ in range(n_rules):
        head = rng.randrange(n_atoms)
        if rng.random() < p_fact:
            rules.append(Rule(head))
            continue
        pos = tuple(rng.randrange(n_atoms) for _ in range(rng.randint(0, max_pos)))
        neg = tuple(rng.randrange(n_atoms) for _ in range(rng.randint(0, max_neg)))
        rules.append(Rule(head, pos, neg))
    return Program(rules, [f"x{i}" for i in range(n_atoms)])


def random_lp1_horn(rng: random.Random, n_atoms: int, n_rules: int, p_fact: float = 0.1) -> Program:
    rules = []
    for _ in range(n_rules):
        head = rng.randrange(n_atoms)
        pos = () if rng.random() < p_fact else (rng.randrange(n_atoms),)
        rules.append(Rule(head, pos))
    return Program(rules, [f"x{i}" for i in range(n_atoms)])


@st.composite
def programs(draw, max_atoms=8, max_rules=14, lp1=False, horn=False):
    n = draw(st.integers(1, max_atoms))
    atom = st.integers(0, n - 1)
    rule = st.builds(
        Rule,
        atom,
        st.lists(atom, max_size=1 if lp1 else 3).map(tuple),
        st.just(()) if horn else st.lists(atom, max_size=3).map(tuple),
    )
    rules = draw(st.lists(rule, max_size=max_rules))
    return Program(rules, [f"x{i}" for i in range(n)])

