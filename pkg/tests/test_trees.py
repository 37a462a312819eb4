import json
import math
import random

import pytest
from hypothesis import given, strategies as st

from helpers import binary_trees
from thompson_links.trees import (
    CARET,
    LEAF,
    ThompsonElement,
    TreeSyntaxError,
    add_caret,
    caret_positions,
    enumerate_trees,
    full_binary_tree,
    generator,
    identity,
    inverse,
    is_positive,
    is_right_vine,
    left_vine,
    multiply,
    parse_tree,
    positive_element,
    reduce_pair,
    remove_caret,
    right_vine,
    serialize_tree,
    word_to_element,
)


def test_parse_examples():
    assert parse_tree(".") == LEAF
    assert parse_tree("(.,.)") == CARET
    t = parse_tree("((.,.),.)")
    assert t.leaf_count == 3 and t.left == CARET and t.right == LEAF


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("(.,.", 4), ("(..)", 2), ("(.,.))", 5), ("x", 0), ("( .,.)", 1)],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(TreeSyntaxError) as info:
        parse_tree(text)
    assert info.value.offset == offset


@given(binary_trees())
def test_text_round_trip(t):
    assert parse_tree(serialize_tree(t)) == t
    assert str(t) == serialize_tree(t)


def test_vines_and_full_trees():
    assert str(right_vine(3)) == "(.,(.,.))"
    assert str(left_vine(3)) == "((.,.),.)"
    assert full_binary_tree(2).leaf_count == 4
    assert is_right_vine(right_vine(5)) and not is_right_vine(left_vine(3))


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_is_catalan(n):
    trees = enumerate_trees(n)
    assert len(trees) == math.comb(2 * n - 2, n - 1) // n
    assert len(set(trees)) == len(trees)
    assert all(t.leaf_count == n for t in trees)


@given(binary_trees(), st.data())
def test_add_then_remove_caret(t, data):
    i = data.draw(st.integers(1, t.leaf_count))
    grown = add_caret(t, i)
    assert i in caret_positions(grown)
    assert remove_caret(grown, i) == t


def test_generators_have_right_vine_bottoms():
    for i in range(4):
        x = generator(i)
        assert x.leaf_count == i + 3
        assert x.bottom == right_vine(i + 3)
        assert x.is_canonical


def test_reduction_is_order_independent():
    rng = random.Random(5)
    for _ in range(50):
        word = [(rng.randrange(4), rng.choice((1, -1))) for _ in range(5)]
        g = word_to_element(word)
        big_top, big_bottom = g.top, g.bottom
        for _ in range(3):
            i = rng.randint(1, big_top.leaf_count)
            big_top, big_bottom = add_caret(big_top, i), add_caret(big_bottom, i)
        first = reduce_pair(big_top, big_bottom)
        last = reduce_pair(big_top, big_bottom, choose=lambda c: c[-1])
        assert first == last == g


words = st.lists(st.tuples(st.integers(0, 4), st.sampled_from((1, -1))), max_size=6)


@given(words, words, words)
def test_group_laws(u, v, w):
    g, h, k = map(word_to_element, (u, v, w))
    assert multiply(multiply(g, h), k) == multiply(g, multiply(h, k))
    assert multiply(g, inverse(g)) == identity()
    assert multiply(identity(), g) == g
    assert multiply(g, h).is_canonical
    assert word_to_element(u + v) == multiply(g, h)


def test_defining_relation_example():
    assert multiply(generator(1), generator(0)) == multiply(generator(0), generator(2))


def test_identity_and_inverse():
    x = generator(1)
    assert multiply(identity(), x) == x == multiply(x, identity())
    assert multiply(x, inverse(x)) == identity()


def test_positive_elements():
    assert is_positive(generator(2))
    assert not is_positive(inverse(generator(0)))
    # the right-most caret is shared with the vine and reduces away
    assert positive_element(parse_tree("((.,.),(.,.))")) == generator(0)


def test_json_round_trip():
    g = multiply(generator(0), inverse(generator(2)))
    assert ThompsonElement.from_json(g.to_json()) == g
    assert set(json.loads(g.to_json())) == {"top", "bottom"}


def test_unequal_leaf_counts_rejected():
    with pytest.raises(ValueError):
        ThompsonElement(CARET, LEAF)
