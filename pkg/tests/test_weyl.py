import itertools

import pytest

from conftest import subword_bruhat_oracle
from deodhar.roots import root_system
from deodhar.weyl import (
    ReducedWord,
    all_reduced_words,
    bruhat_leq,
    context,
    parse_word,
)

B3 = context("B", 3)
A2 = context("A", 2)


def test_identity_and_generators():
    assert B3.from_word([]).window == (1, 2, 3)
    assert B3.from_word([1]).window == (-1, 2, 3)
    assert B3.from_word([2]).window == (2, 1, 3)
    with pytest.raises(ValueError):
        B3.from_word([4])
    with pytest.raises(ValueError):
        B3.from_word([0])


def test_longest_element_brute_force():
    # w_0 is the unique element of maximal length
    elements = list(B3.elements())
    assert len(elements) == 48
    top = max(elements, key=lambda w: w.length)
    assert top.length == 9
    assert sum(1 for w in elements if w.length == 9) == 1
    assert B3.from_word([3, 2, 1, 2, 3, 2, 1, 2, 1]) == top
    assert B3.longest_element() == top


def test_length_examples():
    assert B3.identity.length == 0
    assert B3.longest_element().length == 9
    ctx4 = context("B", 4)
    block = [4, 3, 2, 1, 2, 3]
    assert ctx4.from_word(block + block).length == 12


def test_group_law():
    u = B3.from_word([2, 1])
    assert u * B3.identity == u
    assert B3.from_word([1]) * B3.from_word([1]) == B3.identity
    w = B3.from_word([2, 1, 2])
    assert w.inverse() == w
    for word in ([1, 2], [3, 1, 2], [2, 3, 2, 1]):
        v = B3.from_word(word)
        assert v * v.inverse() == B3.identity


def test_window_validation():
    with pytest.raises(ValueError):
        B3.from_window((1, 1, 2))
    with pytest.raises(ValueError):
        A2.from_window((1, -2, 3))


def test_bruhat_trivial_cases():
    w = B3.from_word([1, 2, 1])
    assert bruhat_leq(B3.identity, w)
    assert bruhat_leq(B3.from_word([1]), w)
    assert not bruhat_leq(w, B3.from_word([1]))


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3)])
def test_bruhat_agrees_with_subword_oracle(family, rank):
    ctx = context(family, rank)
    elements = list(ctx.elements())
    for u in elements:
        for v in elements:
            assert bruhat_leq(u, v) == subword_bruhat_oracle(u, v), (u, v)


def test_act_on_root_examples():
    system = root_system("B", 3)
    b1, b2 = system.simple(1), system.simple(2)
    assert B3.from_word([1]).act_on_root(b1) == -b1
    assert B3.from_word([2, 1, 2]).act_on_root(-b1) == -b1
    assert B3.from_word([1]).act_on_root(b2) == system.root((2, 1, 0))


def test_act_matches_composition_along_reduced_word():
    system = root_system("B", 3)
    for w in B3.elements():
        word = all_reduced_words(w)[0]
        for alpha in system.all_roots():
            image = alpha
            for letter in reversed(word.letters):
                # left-to-right product acts with the rightmost letter first
                image = B3.generator(letter).act_on_root(image)
            assert image == w.act_on_root(alpha)


def test_longest_element_flips_all_positive_roots():
    system = root_system("B", 3)
    w0 = B3.longest_element()
    images = {w0.act_on_root(r) for r in system.positive_roots}
    assert images == {-r for r in system.positive_roots}


def test_descents_window_rule_vs_length():
    for w in B3.elements():
        for i in (1, 2, 3):
            assert w.has_right_descent(i) == (
                w.right_mult_generator(i).length < w.length
            )


def test_length_change_by_one():
    for w in B3.elements():
        for i in (1, 2, 3):
            assert abs(w.right_mult_generator(i).length - w.length) == 1


def test_length_additivity_iff_concatenation_reduced():
    ctx = context("B", 2)
    elements = list(ctx.elements())
    for u in elements:
        for v in elements:
            additive = (u * v).length == u.length + v.length
            assert (u * v).length <= u.length + v.length
            word = all_reduced_words(u)[0].letters + all_reduced_words(v)[0].letters
            concatenation_reduced = ctx.from_word(word).length == len(word)
            assert additive == concatenation_reduced


def test_reduced_word_validation():
    with pytest.raises(ValueError):
        ReducedWord(B3, (1, 1))
    word = parse_word(B3, "3,2,1,2,3,2,1,2,1")
    assert word.product == B3.longest_element()
    assert parse_word(B3, "").product == B3.identity


def test_all_reduced_words():
    assert [w.letters for w in all_reduced_words(B3.identity)] == [()]
    a2_top = A2.longest_element()
    assert [w.letters for w in all_reduced_words(a2_top)] == [(1, 2, 1), (2, 1, 2)]
    b2 = context("B", 2)
    words = all_reduced_words(b2.longest_element())
    assert len(words) == 2
    # independent oracle: scan all letter sequences of the right length
    expected = {
        seq
        for seq in itertools.product((1, 2), repeat=4)
        if b2.from_word(seq) == b2.longest_element()
    }
    assert {w.letters for w in words} == expected


def test_all_reduced_words_bound():
    with pytest.raises(ValueError):
        all_reduced_words(B3.longest_element(), max_length=5)


def test_serialization():
    w = B3.from_window((-1, 3, 2))
    assert w.serialize() == "-1,3,2"
    assert B3.parse_element("-1,3,2") == w
    assert B3.parse_element("e") == B3.identity
