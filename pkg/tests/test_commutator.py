from itertools import chain, combinations

import pytest
from hypothesis import given, settings

from purebraid.artin import are_equal, is_trivial
from purebraid.braid import concat, invert
from purebraid.brunnian import monic_trees
from purebraid.commutator import Bracket, bracket, evaluate, is_monic, leaf, leaf_support, subtrees
from purebraid.retraction import StrandSet, phi, support

from conftest import W, words


def test_evaluate():
    assert evaluate(leaf(1, 2, n=3)) == W(3, (1, 2))
    t = Bracket(leaf(1, 3, n=4), leaf(2, 4, n=4))
    assert evaluate(t) == W(4, (1, 3, -1), (2, 4, -1), (1, 3), (2, 4))
    same = evaluate(Bracket(leaf(1, 2, n=3), leaf(1, 2, n=3)))
    assert len(same) == 4 and is_trivial(same)


def test_leaf_support():
    assert leaf_support(leaf(1, 2, n=4)) == StrandSet.of(4, {1, 2})
    assert leaf_support(Bracket(leaf(1, 2, n=4), leaf(1, 4, n=4))) == StrandSet.of(4, {1, 2, 4})
    t = Bracket(Bracket(leaf(1, 2, n=4), leaf(2, 3, n=4)), leaf(3, 4, n=4))
    assert leaf_support(t) == StrandSet.of(4, {1, 2, 3, 4})


def test_is_monic():
    assert is_monic(leaf(1, 2, -1, n=4))
    assert not is_monic(Bracket(leaf(1, 2, n=4), leaf(3, 4, n=4)))
    assert is_monic(Bracket(Bracket(leaf(1, 2, n=4), leaf(1, 3, n=4)), leaf(1, 4, n=4)))
    # a trivial bracket deep inside spoils the whole tree
    inner = Bracket(leaf(1, 2, n=4), leaf(3, 4, n=4))
    assert not is_monic(Bracket(inner, leaf(1, 3, n=4)))


def test_bracket_filters_trivial():
    assert bracket(leaf(1, 2, n=3), leaf(1, 2, n=3)) is None
    assert isinstance(bracket(leaf(1, 3, n=4), leaf(2, 4, n=4)), Bracket)
    assert isinstance(bracket(leaf(1, 2, n=3), leaf(2, 3, n=3)), Bracket)
    with pytest.raises(ValueError):
        Bracket(leaf(1, 2, n=3), leaf(1, 2, n=4))


def test_leaf_range():
    with pytest.raises(ValueError):
        leaf(1, 4, n=3)


def test_subtrees_and_text():
    t = Bracket(Bracket(leaf(1, 2, n=4), leaf(1, 3, -1, n=4)), leaf(1, 4, n=4))
    assert len(list(subtrees(t))) == 5
    assert str(t) == "[[p[1,2],p[1,3]^-1],p[1,4]]"
    assert t.leaves == 3


def test_nontrivial_matches_word_problem():
    # cached normal forms against the evaluated word
    for t in monic_trees(4, 2)[:60]:
        assert t.nontrivial == (not is_trivial(evaluate(t)))


@settings(max_examples=60, deadline=None)
@given(words(n=4, max_len=4), words(n=4, max_len=4))
def test_commutator_word_trivial_iff_commute(x, y):
    word = concat(invert(x), invert(y), x, y)
    assert is_trivial(word) == are_equal(concat(x, y), concat(y, x))


def small_monic_trees():
    return [t for k in (1, 2, 3) for t in monic_trees(4, k)]


def all_subsets(n):
    return [
        StrandSet.of(n, c) for c in chain.from_iterable(combinations(range(1, n + 1), k) for k in range(n + 1))
    ]


def test_monic_trees_are_monic():
    trees = small_monic_trees()
    assert all(is_monic(t) for t in trees)
    assert len({str(t) for t in trees}) == len(trees)


def test_kernel_criterion_sample():
    # the exhaustive run lives in the acceptance suite
    trees = small_monic_trees()[::97]
    for t in trees:
        for s in all_subsets(4):
            assert is_trivial(phi(s, evaluate(t))) == bool(t.strands & s.members)
        assert support(evaluate(t)) == leaf_support(t)
