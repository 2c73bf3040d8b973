import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from posetramsey.blockers import criticalize
from posetramsey.core import N_POSET, V, GroundSet, Poset, Subposet, antichain, boolean_lattice, boolean_lattice_poset, chain
from posetramsey.errors import InvalidInput
from posetramsey.sp_nfree import (
    MAX,
    MIN,
    Leaf,
    Parallel,
    Series,
    all_posets,
    evaluate,
    find_root,
    is_n_free,
    leaves,
    random_poset,
    sp_decompose,
    tree_to_json,
)


def check_tree(p, tree):
    """Leaf k of the evaluated tree stands for element leaves(tree)[k] of p."""
    q = evaluate(tree)
    order = leaves(tree)
    assert sorted(order) == list(range(p.n))
    for a in range(p.n):
        for b in range(p.n):
            assert q.leq(a, b) == p.leq(order[a], order[b])


def test_examples():
    assert sp_decompose(chain(1)) == Leaf(0)
    assert sp_decompose(V) == Series(Leaf(2), Parallel(Leaf(0), Leaf(1)))
    assert tree_to_json(sp_decompose(V), V.names) == {"series": [{"leaf": "C"}, {"parallel": [{"leaf": "A"}, {"leaf": "B"}]}]}
    assert sp_decompose(N_POSET) is None
    with pytest.raises(InvalidInput):
        sp_decompose(Poset(0, ()))


def test_n_free_examples(fig2b):
    assert is_n_free(boolean_lattice_poset(2))
    assert not is_n_free(boolean_lattice_poset(3))
    assert is_n_free(fig2b)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16), (5, 63)])
def test_all_posets_counts(n, count):
    assert len(all_posets(n)) == count
    if n <= 4:
        assert oracles.count_posets_brute(n) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_valdes_exhaustive(n):
    for p in all_posets(n):
        tree = sp_decompose(p)
        rel = oracles.leq_pairs(range(n), p.covers())
        assert is_n_free(p) == (tree is not None) == (not oracles.contains_n(n, rel))
        if tree is not None:
            check_tree(p, tree)


@given(st.integers(0, 2**32 - 1), st.integers(6, 8))
@settings(max_examples=300)
def test_valdes_random(seed, n):
    p = random_poset(random.Random(seed), n)
    tree = sp_decompose(p)
    assert is_n_free(p) == (tree is not None)
    if tree is not None:
        check_tree(p, tree)


def test_random_poset_is_seeded():
    a = random_poset(random.Random(7), 8)
    b = random_poset(random.Random(7), 8)
    assert a == b


def test_find_root_examples(fig2b, z4):
    y = z4.mask(["1", "2"])
    assert find_root(fig2b, y) == (0, MIN)
    g = GroundSet(("x", "a"))
    two = Subposet.from_labels(g, [["x"], ["x", "a"]])
    assert find_root(two, g.mask(["a"])) == (1, MIN)
    assert find_root(two, g.mask(["a"]), prefer=MAX) == (3, MAX)
    flat = Subposet.from_labels(g, [["x"], ["a"]])
    with pytest.raises(InvalidInput):
        find_root(flat, g.mask(["a"]))
    with pytest.raises(InvalidInput):
        find_root(fig2b, y, prefer="middle")


def test_find_root_rejects_non_critical(fig2b, z4):
    y = z4.mask(["1", "2"])
    bigger = Subposet(z4, fig2b.vertices + (z4.full,))
    with pytest.raises(InvalidInput):
        find_root(bigger, y)
    assert find_root(criticalize(bigger, y), y)[1] in (MIN, MAX)
