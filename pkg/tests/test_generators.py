import pytest

from wfs.core import is_lp1
from wfs.generators import (
    FAMILIES, GeneratorSpec, ballast, chain, generate, guarded_chain, paper_example,
    pos_loop_chain, random_lp1,
)
from wfs.oracle import naive_wfs
from wfs.textio import format_program


def test_paper_example_shape():
    p = paper_example()
    assert len(p) == 17
    assert p.n_atoms == 11
    assert sorted(p.names) == list("abcdefghijk")


def test_chain_all_true():
    p = chain(5)
    r = naive_wfs(p)
    assert r.true_set == set(range(5))


def test_pos_loop_chain_all_false():
    p = pos_loop_chain(3)
    assert naive_wfs(p).named()["false"] == ["a1", "a2", "a3"]


def test_guarded_chain_model():
    r = naive_wfs(guarded_chain(4)).named()
    assert r["true"] == ["c1", "c2", "c3", "c4"]
    assert r["false"] == ["b1", "b2", "b3", "b4"]


def test_ballast_shape():
    p = ballast(5)
    assert p.n_atoms == 4 * 5
    assert len(p) == len(guarded_chain(5)) + 5 + 25
    p = ballast(3, k=2)
    assert p.n_atoms == 3 * 2 + 3 + 2
    r = naive_wfs(p).named()
    assert set(r["true"]) >= {"q1", "q2", "p1", "p2", "p3"}


@pytest.mark.parametrize("family", FAMILIES + ("guarded_chain+ballast",))
def test_every_family_is_lp1_and_deterministic(family):
    spec = GeneratorSpec(family, 6, {"seed": 3})
    a, b = generate(spec), generate(GeneratorSpec(family, 6, {"seed": 3}))
    assert is_lp1(a)
    assert format_program(a) == format_program(b)


def test_random_lp1_seeds_differ():
    assert format_program(random_lp1(8, 20, 0.3, 1)) != format_program(random_lp1(8, 20, 0.3, 2))


def test_random_lp1_negatives_skip_the_positive_atom():
    for seed in range(50):
        p = random_lp1(6, 10, 1.0, seed)
        for r in p.rules:
            assert not set(r.pos_body) & set(r.neg_body)
            assert len(r.neg_body) == (5 if r.pos_body else 6)


@pytest.mark.parametrize("bad", [
    lambda: chain(0), lambda: pos_loop_chain(0), lambda: guarded_chain(0),
    lambda: ballast(2, 0), lambda: random_lp1(0, 1, 0.1, 0), lambda: random_lp1(3, 1, 1.5, 0),
    lambda: generate(GeneratorSpec("nope", 3)),
])
def test_out_of_range(bad):
    with pytest.raises(ValueError):
        bad()
