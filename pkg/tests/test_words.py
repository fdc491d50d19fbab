import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphprod import (
    Syllable,
    UnknownElement,
    UnknownVertex,
    WordSyntaxError,
    canonical_form,
    equal,
    format_word,
    invert_word,
    is_graphically_reduced,
    parse_spec,
    parse_word,
    reduce,
    word_length,
)
from graphprod.oracle import oracle_equal
from conftest import GEX_DATA, syllable_pool

SPEC = parse_spec(GEX_DATA)

gex_words = st.lists(
    st.sampled_from(syllable_pool(SPEC)), max_size=8
).map(tuple)


def W(text, spec=SPEC):
    return parse_word(spec, text)


def test_parse_and_format_roundtrip():
    w = W("a:1 c:2 b:1")
    assert w == (Syllable(0, 1), Syllable(2, 2), Syllable(1, 1))
    assert format_word(SPEC, w) == "a:1 c:2 b:1"
    assert W("") == ()
    assert format_word(SPEC, ()) == ""


def test_parse_negative_atom_wraps():
    assert W("c:-1") == (Syllable(2, 2),)


def test_parse_identity_atom_reduces_away():
    assert reduce(SPEC, W("a:0 c:3")) == ()


@pytest.mark.parametrize(
    "text",
    ["a:1  b:1", " a:1", "a:1 ", "a1", "a:", "a:1 b"],
)
def test_parse_rejects_sloppy_spacing_and_shape(text):
    with pytest.raises(WordSyntaxError):
        W(text)


def test_parse_unknown_vertex_and_element():
    with pytest.raises(UnknownVertex):
        W("q:1")
    with pytest.raises(UnknownVertex):
        W(":1")  # empty vertex part names no vertex
    with pytest.raises(UnknownElement):
        W("a:x")


def test_reduce_merges_through_commuting_syllables():
    # c commutes with both a and b, so the two a-syllables meet and cancel
    assert reduce(SPEC, W("a:1 c:1 a:1")) == W("c:1")
    assert reduce(SPEC, W("a:1 c:2 a:1 c:1 b:1")) == W("b:1")


def test_reduce_blocked_by_non_adjacent_vertex():
    w = W("a:1 b:1 a:1")
    assert reduce(SPEC, w) == w
    assert is_graphically_reduced(SPEC, w)


def test_reduce_drops_identity_syllables():
    assert reduce(SPEC, (Syllable(0, 0), Syllable(2, 1))) == W("c:1")


def test_word_length_sums_vertex_lengths():
    assert word_length(SPEC, W("a:1 c:2 b:1")) == 3  # c:2 is one letter in C3
    assert word_length(SPEC, ()) == 0


def test_canonical_form_orders_commuting_syllables():
    lhs = canonical_form(SPEC, W("c:1 a:1"))
    rhs = canonical_form(SPEC, W("a:1 c:1"))
    assert lhs == rhs
    assert tuple(lhs) == W("a:1 c:1")  # vertex a sorts first
    assert canonical_form(SPEC, W("b:1 a:1")) != canonical_form(SPEC, W("a:1 b:1"))


def test_equal_basic():
    assert equal(SPEC, W("a:1 c:1"), W("c:1 a:1"))
    assert not equal(SPEC, W("a:1 b:1"), W("b:1 a:1"))
    assert equal(SPEC, W("c:1 c:1 c:1"), ())


def test_invert_word():
    w = W("a:1 c:1")
    assert invert_word(SPEC, w) == W("c:2 a:1")
    assert reduce(SPEC, w + invert_word(SPEC, w)) == ()


@given(gex_words)
def test_reduce_is_idempotent_and_reduced(w):
    r = reduce(SPEC, w)
    assert is_graphically_reduced(SPEC, r)
    assert reduce(SPEC, r) == r


@given(gex_words)
def test_reduce_preserves_the_element(w):
    assert oracle_equal(SPEC, w, reduce(SPEC, w))


@given(gex_words)
def test_reduced_words_are_minimal_length(w):
    # no straight-line rewrite reaches fewer syllables than the reduction
    r = reduce(SPEC, w)
    assert len(r) <= len(w)
    assert word_length(SPEC, r) <= word_length(SPEC, w)


@given(gex_words, st.data())
def test_canonical_form_invariant_under_adjacent_swaps(w, data):
    r = reduce(SPEC, w)
    spots = [
        i
        for i in range(len(r) - 1)
        if SPEC.graph.adjacent(r[i].vertex, r[i + 1].vertex)
    ]
    if not spots:
        return
    i = data.draw(st.sampled_from(spots))
    swapped = r[:i] + (r[i + 1], r[i]) + r[i + 2 :]
    assert canonical_form(SPEC, swapped) == canonical_form(SPEC, r)


@given(gex_words, gex_words)
def test_equal_matches_concatenation_inverse_test(w1, w2):
    # w1 == w2 exactly when w1 * w2^-1 reduces to the empty word
    lhs = equal(SPEC, w1, w2)
    assert lhs == (reduce(SPEC, w1 + invert_word(SPEC, w2)) == ())


@given(gex_words)
def test_inverse_cancels_on_both_sides(w):
    inv = invert_word(SPEC, w)
    assert reduce(SPEC, w + inv) == ()
    assert reduce(SPEC, inv + w) == ()
