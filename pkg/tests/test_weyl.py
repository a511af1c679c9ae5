import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from envlat.dynkin import build_diagram
from envlat.errors import ResourceLimitError
from envlat.weyl import (WeylGroup, bruhat_leq, enumerate_weyl, min_coset_reps,
                         min_coset_reps_indices, parabolic_index, weyl_order)

ORDERS = [("A", 1, 2), ("A", 2, 6), ("A", 3, 24), ("A", 4, 120), ("B", 2, 8), ("B", 3, 48),
          ("B", 4, 384), ("C", 3, 48), ("D", 4, 192), ("D", 5, 1920), ("G", 2, 12),
          ("F", 4, 1152), ("E", 6, 51840)]


@pytest.mark.parametrize("kind,rank,order", ORDERS)
def test_enumerated_order(kind, rank, order):
    d = build_diagram(kind, rank)
    assert weyl_order(d) == order
    assert len(enumerate_weyl(d)) == order


def test_formula_orders_beyond_cap():
    assert weyl_order(build_diagram("E", 7)) == 2903040
    assert weyl_order(build_diagram("E", 8)) == 696729600
    with pytest.raises(ResourceLimitError, match="696729600"):
        enumerate_weyl(build_diagram("E", 8))


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("ENVLAT_CAP_WEYL", "100")
    with pytest.raises(ResourceLimitError):
        enumerate_weyl(build_diagram("B", 4))
    assert len(enumerate_weyl(build_diagram("A", 3))) == 24


def test_longest_lengths():
    for kind, rank, top in [("A", 3, 6), ("B", 3, 9), ("F", 4, 24), ("G", 2, 6), ("D", 4, 12)]:
        W = enumerate_weyl(build_diagram(kind, rank))
        assert max(W.lengths) == top
        assert W.lengths[W.longest_index()] == top


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_type_a_matches_permutations(n):
    """Words act like adjacent transpositions; length equals inversion count."""
    W = enumerate_weyl(build_diagram("A", n))
    perms = {}
    for k in range(len(W)):
        word = W.reduced_word(W.element(k))
        p = oracles.perm_of_word(word, n)
        assert oracles.inversions(p) == W.lengths[k] == len(word)
        perms[k] = p
    assert len(set(perms.values())) == len(W)
    for u in range(len(W)):
        for v in range(0, len(W), 7):
            assert perms[W.mul_index(u, v)] == oracles.perm_of_word(
                W.reduced_word(W.element(u)) + W.reduced_word(W.element(v)), n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_matches_tableau_criterion(n):
    W = enumerate_weyl(build_diagram("A", n))
    perms = [oracles.perm_of_word(W.reduced_word(W.element(k)), n) for k in range(len(W))]
    for u in range(len(W)):
        for w in range(len(W)):
            assert W.bruhat_leq_index(u, w) == oracles.tableau_leq(perms[u], perms[w])


@pytest.mark.parametrize("kind,rank", [("B", 3), ("G", 2), ("C", 3), ("A", 3)])
def test_bruhat_matches_subword_property(kind, rank):
    W = enumerate_weyl(build_diagram(kind, rank))
    for w in range(len(W)):
        below = oracles.subword_products(W, W.reduced_word(W.element(w)))
        for u in range(len(W)):
            assert W.bruhat_leq_index(u, w) == (u in below)


def test_bruhat_is_a_partial_order_on_f4_sample():
    W = enumerate_weyl(build_diagram("F", 4))
    rng = random.Random(4)
    for _ in range(300):
        u, v, w = (rng.randrange(len(W)) for _ in range(3))
        assert W.bruhat_leq_index(u, u)
        if W.bruhat_leq_index(u, v) and W.bruhat_leq_index(v, u):
            assert u == v
        if W.bruhat_leq_index(u, v) and W.bruhat_leq_index(v, w):
            assert W.bruhat_leq_index(u, w)
        assert W.bruhat_leq_index(0, u) and W.bruhat_leq_index(u, W.longest_index())


@pytest.mark.parametrize("kind,rank", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
def test_coset_representatives(kind, rank):
    d = build_diagram(kind, rank)
    W = enumerate_weyl(d)
    for K in oracles.subsets(range(1, rank + 1)):
        I = d.subset(K)
        reps = min_coset_reps_indices(W, I)
        assert len(reps) == parabolic_index(d, I) == len(W) // weyl_order(d, I)
        for r in reps:
            assert oracles.min_in_coset(W, r, I) == r
        for k in range(0, len(W), 5):
            assert W.min_coset_rep_index(k, I) == oracles.min_in_coset(W, k, I)


def test_parabolic_subgroup_order():
    d = build_diagram("B", 4)
    W = enumerate_weyl(d)
    for K, order in [([1, 2], 6), ([3, 4], 8), ([1, 3], 4), ([2, 3, 4], 48), ([], 1)]:
        assert len(W.parabolic_subgroup(d.subset(K))) == order == weyl_order(d, d.subset(K))


def test_reduced_word_round_trip():
    W = enumerate_weyl(build_diagram("G", 2))
    for w in W.elements:
        assert W.from_word(W.reduced_word(w)) == w
        assert W.mul(w, W.inverse(w)) == W.identity
    assert W.word_label(W.identity) == "e"
    assert min_coset_reps(W, W.diagram.nodes).representatives == (W.identity,)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=12))
def test_word_products_b3(word):
    W = enumerate_weyl(build_diagram("B", 3))
    w = W.from_word(word)
    assert w.length <= len(word) and (w.length - len(word)) % 2 == 0
    assert bruhat_leq(W, W.identity, w)


def test_direct_construction_respects_explicit_cap():
    with pytest.raises(ResourceLimitError):
        WeylGroup(build_diagram("A", 4), cap=100)
