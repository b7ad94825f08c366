import pytest
from hypothesis import given
from hypothesis import strategies as st

from purebraid.commutator import evaluate
from purebraid.expr import (
    Commutator,
    Gen,
    ParseError,
    Power,
    Product,
    from_tree,
    infer_n,
    lower_to_word,
    parse,
    to_text,
    to_tree,
)

from conftest import W


def test_parse_product_and_power():
    assert parse("p[1,3] p[2,4]^-1") == Product((Gen(1, 3), Power(Gen(2, 4), -1)))


def test_parse_nested_commutator():
    e = parse("[[p[1,2],p[1,3]],p[1,4]]")
    assert e == Commutator(Commutator(Gen(1, 2), Gen(1, 3)), Gen(1, 4))
    assert str(to_tree(e, 4)) == "[[p[1,2],p[1,3]],p[1,4]]"


@pytest.mark.parametrize(
    "text,pos",
    [("p[3,1]", 0), ("p[1,2] q", 7), ("p[1,2", 5), ("[p[1,2] p[1,3]]", 14), ("p[1,2]^0", 7), ("p[0,2]", 2)],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos


def test_index_beyond_n():
    with pytest.raises(ValueError):
        parse("p[1,5]", n=4)
    with pytest.raises(ValueError):
        lower_to_word(parse("p[1,5]"), 4)


def test_single_term_collapses():
    assert parse("(p[1,2])") == Gen(1, 2)
    assert parse("  ") == Product(())


def test_lower_to_word():
    assert lower_to_word(parse("p[1,2]^2"), 2) == W(2, (1, 2), (1, 2))
    assert lower_to_word(parse("[p[1,3],p[2,4]]"), 4) == W(4, (1, 3, -1), (2, 4, -1), (1, 3), (2, 4))
    assert lower_to_word(parse(""), 3) == W(3)
    assert lower_to_word(parse("(p[1,2] p[2,3])^-2"), 3) == W(3, (2, 3, -1), (1, 2, -1), (2, 3, -1), (1, 2, -1))


def test_infer_n():
    assert infer_n(parse("p[2,5]")) == 5
    assert infer_n(parse("")) == 1
    assert infer_n(parse("p[1,2]"), 4) == 4


def test_to_tree_rejects_non_trees():
    with pytest.raises(ValueError):
        to_tree(parse("p[1,2] p[1,3]"), 3)
    with pytest.raises(ValueError):
        to_tree(parse("p[1,2]^2"), 3)


def exprs():
    gens = st.builds(lambda a, d: Gen(a, a + d), st.integers(1, 5), st.integers(1, 3))

    def extend(children):
        products = st.lists(children, max_size=4).filter(lambda xs: len(xs) != 1).map(lambda xs: Product(tuple(xs)))
        powers = st.builds(Power, children, st.integers(-3, 3).filter(bool))
        comms = st.builds(Commutator, children, children)
        return products | powers | comms

    return st.recursive(gens, extend, max_leaves=10)


@given(exprs())
def test_print_parse_round_trip(e):
    assert parse(to_text(e)) == e


def tree_exprs():
    gens = st.builds(lambda a, d: Gen(a, a + d), st.integers(1, 3), st.integers(1, 2))
    leaves = gens | st.builds(Power, gens, st.just(-1))
    return st.recursive(leaves, lambda c: st.builds(Commutator, c, c), max_leaves=6)


@given(tree_exprs())
def test_commutator_lowering_matches_tree(e):
    t = to_tree(e, 5)
    assert lower_to_word(e, 5) == evaluate(t)
    assert from_tree(t) == e
