import json

import pytest

from phlab.props import ph_oracle
from phlab.ramsey import (
    Coloring,
    Fails,
    Holds,
    Unknown,
    chain_links,
    colex_subsets,
    find_bad_coloring,
    find_witness,
    is_homogeneous,
    is_large,
    min_witness,
    ph_holds,
    sigma,
    solovay_chain_check,
)


def test_colex_order():
    assert colex_subsets(4, 2) == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))


def test_is_large():
    assert is_large({0})
    assert not is_large({3, 4})
    assert is_large({2, 5, 9})
    assert not is_large(set())


def test_is_homogeneous():
    c = Coloring.constant(2, 5, k=3, color=2)
    assert is_homogeneous(c, {0, 2, 4})
    assert is_homogeneous(Coloring(2, 4, 2, (0, 1, 0, 1, 1, 0)), {3})
    assert not is_homogeneous(Coloring(1, 2, 2, (0, 1)), {0, 1})


def test_find_witness():
    for n in (1, 2, 3):
        assert find_witness(Coloring.constant(n, 4), 4) == (0, 1, 2, 3)
    assert find_witness(Coloring(1, 2, 2, (0, 1)), 2) is None
    assert find_witness(Coloring(1, 3, 2, (0, 1, 1)), 2) == (1, 2)


def test_find_bad_coloring_examples():
    r = find_bad_coloring(2, 2, 1, 2)
    assert r.status == "found" and r.coloring.colors == (0, 1)
    assert find_bad_coloring(2, 2, 1, 3).status == "none"
    assert find_bad_coloring(1, 1, 1, 1).status == "none"


def test_search_is_lexicographically_least():
    for k, m, n, N in [(2, 3, 2, 5), (3, 3, 2, 5), (2, 2, 1, 2), (2, 4, 2, 6)]:
        r = find_bad_coloring(k, m, n, N)
        assert r.status == "found"
        assert r.coloring.colors == ph_oracle(k, m, n, N)


def test_ph_examples():
    assert ph_holds(1, 1, 1, 1) == Holds()
    v = ph_holds(2, 2, 1, 2)
    assert isinstance(v, Fails) and v.witness.colors == (0, 1)
    assert ph_holds(2, 2, 1, 3) == Holds()


def test_node_budget_gives_unknown():
    v = ph_holds(2, 3, 2, 6, node_budget=40)
    assert isinstance(v, Unknown) and v.reason == "node-budget"
    # building the candidate list alone would exceed the budget
    v = ph_holds(2, 3, 2, 40, node_budget=100)
    assert isinstance(v, Unknown) and v.reason == "candidate-budget"


def test_exhaustion_hash_is_deterministic():
    a = ph_holds(2, 3, 2, 6)
    b = ph_holds(2, 3, 2, 6)
    assert isinstance(a, Holds)
    assert a.log_hash == b.log_hash and a.nodes == b.nodes


def test_min_witness_examples():
    assert sigma(1, 2).value == 3
    assert min_witness(2, 2, 1).value == 3
    for m in range(1, 7):
        assert min_witness(1, m, 1).value == m
    for k in range(1, 5):
        assert min_witness(k, 1, 1).value == 1


def test_min_witness_caps():
    mw = min_witness(2, 3, 2, N_cap=3)
    assert not mw.known and "N_cap" in mw.reason
    mw = min_witness(2, 3, 2, node_budget=3)
    assert not mw.known and max(mw.verdicts) < 6


def test_coloring_json_roundtrip():
    c = Coloring(2, 4, 2, (0, 1, 1, 0, 0, 1))
    assert Coloring.from_json(json.loads(json.dumps(c.to_json()))) == c
    assert c.color({3, 1}) == 0


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring(2, 4, 2, (0, 1))
    with pytest.raises(ValueError):
        Coloring(1, 2, 2, (0, 2))


def test_chain():
    assert all(solovay_chain_check(n) for n in (15, 16))
    links = chain_links(14)
    assert links["double_exp_vs_140n2"] is False
    assert 2**14 == 16384 < 140 * 14 * 14 == 27440
    with pytest.raises(ValueError):
        solovay_chain_check(14)
