import random

from hypothesis import given, strategies as st

from wfs.generators import paper_example
from wfs.horn import DerivationEngine, HornProgram, assert_facts, engine_init, group_by, least_model
from wfs.oracle import naive_lm
from wfs.reducts import h_reduct


def horn(rules, n):
    return HornProgram(rules, n)


def test_least_model_chain():
    assert least_model(horn([(0, ()), (1, (0,)), (2, (1,))], 3)) == {0, 1, 2}


def test_least_model_loop_is_empty():
    assert least_model(horn([(0, (1,)), (1, (0,))], 2)) == set()


def test_least_model_worked_example():
    p = paper_example()
    assert least_model(h_reduct(p)) == p.ids("abc")


def test_engine_fact_queued_until_first_assert():
    e = engine_init(horn([(0, ())], 1))
    assert e.derived_set() == {0}
    assert assert_facts(e, ()) == {0}
    assert assert_facts(e, ()) == set()


def test_engine_on_empty_program():
    e = engine_init(horn([], 0))
    assert e.derived_set() == set()
    assert e.assert_facts(()) == set()


def test_engine_assert_propagates():
    e = engine_init(horn([(1, (0,))], 2))
    assert e.assert_facts({0}) == {0, 1}
    e = engine_init(horn([(1, (0,)), (2, (1,))], 3))
    assert e.assert_facts({0}) == {0, 1, 2}
    e = engine_init(horn([(1, (0,))], 2))
    assert e.assert_facts(()) == set()


def test_engine_negative_literal_atom():
    # t :- not b over the extended alphabet: t = 0, b = 1, not(b) = 2 + 1
    e = engine_init(horn([(0, (3,))], 4))
    assert e.assert_facts({3}) == {3, 0}


def test_duplicate_body_occurrences_counted():
    q = horn([(2, (0, 0, 1)), (3, (2, 2))], 4)
    e = DerivationEngine(q)
    assert e.assert_facts({0}) == {0}
    assert e.counters[0] == 1
    assert e.assert_facts({1}) == {1, 2, 3}
    assert e.counters == [0, 0]


def test_group_by():
    offsets, flat = group_by(3, [2, 0, 2, 2], [10, 11, 12, 13])
    assert list(offsets) == [0, 1, 1, 4]
    assert list(flat) == [11, 10, 12, 13]


@st.composite
def horn_programs(draw):
    n = draw(st.integers(1, 10))
    atom = st.integers(0, n - 1)
    rules = draw(st.lists(st.tuples(atom, st.lists(atom, max_size=3).map(tuple)), max_size=20))
    return HornProgram(rules, n)


@given(horn_programs())
def test_least_model_matches_oracle(q):
    assert least_model(q) == naive_lm(q)


@given(horn_programs(), st.data())
def test_batched_assertion_equals_batch_model(q, data):
    facts = data.draw(st.lists(st.integers(0, q.alphabet_size - 1), max_size=6))
    cuts = sorted(data.draw(st.lists(st.integers(0, len(facts)), max_size=3)))
    e = DerivationEngine(q)
    seen = set()
    prev = 0
    for c in cuts + [len(facts)]:
        new = e.assert_facts(facts[prev:c])
        assert not new & seen
        seen |= new
        prev = c
    expected = naive_lm(HornProgram(list(q.rules) + [(a, ()) for a in facts], q.alphabet_size))
    assert e.derived_set() == expected == seen


@given(horn_programs(), st.data())
def test_residual_program_identity(q, data):
    # LM(R + M) = LM(R) + LM(res(R) + M) when M holds no heads of R
    heads = {h for h, _ in q.rules}
    free = [a for a in range(q.alphabet_size) if a not in heads]
    m = set(data.draw(st.lists(st.sampled_from(free), max_size=4))) if free else set()
    e = DerivationEngine(q)
    base = e.assert_facts(())
    res = e.residual()
    rhs = base | naive_lm(HornProgram(list(res.rules) + [(a, ()) for a in m], q.alphabet_size))
    assert naive_lm(HornProgram(list(q.rules) + [(a, ()) for a in m], q.alphabet_size)) == rhs


def test_least_model_monotone_in_rules(rng):
    for _ in range(200):
        n = rng.randint(1, 8)
        rules = [(rng.randrange(n), tuple(rng.randrange(n) for _ in range(rng.randint(0, 2))))
                 for _ in range(rng.randint(0, 12))]
        extra = (rng.randrange(n), tuple(rng.randrange(n) for _ in range(rng.randint(0, 2))))
        small = least_model(HornProgram(rules, n))
        assert small <= least_model(HornProgram(rules + [extra], n))
        assert small <= set(range(n))


def test_thousand_random_programs_against_oracle():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 12)
        rules = [(rng.randrange(n), tuple(rng.randrange(n) for _ in range(rng.randint(0, 3))))
                 for _ in range(rng.randint(0, 25))]
        q = HornProgram(rules, n)
        assert least_model(q) == naive_lm(q)
