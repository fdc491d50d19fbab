import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphprod import (
    BfsLimitExceeded,
    NotCyclicallyReduced,
    Syllable,
    are_conjugate,
    clf_upper_bound,
    cyclic_shuffle_class,
    cyclically_reduce,
    equal,
    floating_decomposition,
    invert_word,
    is_graphically_cyclically_reduced,
    parse_spec,
    parse_word,
    reduce,
    verify_witness,
    word_length,
)
from conftest import GEX_DATA, cyclic, syllable_pool

SPEC = parse_spec(GEX_DATA)

# v-z and w-z commute, y-v commute; v and w never do. Words over this spec
# exercise the awkward interleavings where stripping a pair unblocks merges
# elsewhere.
AWKWARD = parse_spec(
    {
        "vertices": [
            {"name": "v", "group": cyclic(5)},
            {"name": "w", "group": cyclic(5)},
            {"name": "z", "group": cyclic(5)},
            {"name": "y", "group": cyclic(3)},
        ],
        "edges": [["v", "z"], ["w", "z"], ["y", "v"]],
    }
)

awkward_words = st.lists(
    st.sampled_from(syllable_pool(AWKWARD)), max_size=10
).map(tuple)


def W(text, spec=SPEC):
    return parse_word(spec, text)


def test_cyclically_reduce_free_product_spine():
    # a b a b a = (a b) a (a b)^-1, and a single syllable is as short
    # as a core gets
    red = cyclically_reduce(SPEC, W("a:1 b:1 a:1 b:1 a:1"))
    assert red.core == W("a:1")
    assert red.conjugator == W("a:1 b:1")


def test_cyclically_reduce_gcr_input_is_fixed():
    w = W("a:1 b:1")
    red = cyclically_reduce(SPEC, w)
    assert red.core == w
    assert red.conjugator == ()


def test_cyclically_reduce_collapses_fully():
    # b c b = c in this product, then a c a = c; nothing to conjugate away
    red = cyclically_reduce(SPEC, W("a:1 b:1 c:1 b:1 a:1"))
    assert red.core == W("c:1")
    assert red.conjugator == ()


def test_cyclically_reduce_fold_remerges():
    # v1 w1 z1 v1 w4 v1 z4 v1 over the awkward spec: the z pair cancels in
    # place, the v pair survives, and the folded leftover merges with the
    # trailing v syllable of the residue.
    S = Syllable
    w = (S(0, 1), S(1, 1), S(2, 1), S(0, 1), S(1, 4), S(0, 1), S(2, 4), S(0, 1))
    red = cyclically_reduce(AWKWARD, w)
    assert red.core == (S(1, 1), S(0, 1), S(1, 4), S(0, 3))
    assert red.conjugator == (S(0, 1),)
    assert is_graphically_cyclically_reduced(AWKWARD, red.core)


@given(awkward_words)
def test_cyclic_reduction_contract(w):
    red = cyclically_reduce(AWKWARD, w)
    assert is_graphically_cyclically_reduced(AWKWARD, red.core)
    n = word_length(AWKWARD, reduce(AWKWARD, w))
    assert word_length(AWKWARD, red.core) <= n
    assert 2 * word_length(AWKWARD, red.conjugator) <= n
    back = red.conjugator + red.core + invert_word(AWKWARD, red.conjugator)
    assert equal(AWKWARD, back, w)


def test_is_gcr_examples():
    assert is_graphically_cyclically_reduced(SPEC, W("a:1 b:1"))
    assert not is_graphically_cyclically_reduced(SPEC, W("a:1 b:1 a:1"))
    # the pair may meet through the commuting middle
    assert not is_graphically_cyclically_reduced(SPEC, W("b:1 c:1 b:1"))
    assert is_graphically_cyclically_reduced(SPEC, ())


def test_floating_decomposition_splits_off_central_syllable():
    f = floating_decomposition(SPEC, W("a:1 b:1 c:2"))
    assert f.x_part == W("a:1 b:1")
    assert f.floats == W("c:2")


def test_floating_decomposition_everything_floats():
    f = floating_decomposition(SPEC, W("c:1"))
    assert f.x_part == ()
    assert f.floats == W("c:1")


def test_floating_decomposition_refuses_non_gcr():
    with pytest.raises(NotCyclicallyReduced):
        floating_decomposition(SPEC, W("a:1 b:1 a:1"))


def test_cyclic_shuffle_class_rotations_are_witnessed():
    core = W("a:1 b:1")
    wait = cyclic_shuffle_class(SPEC, core)
    # both rotations of a two-syllable core with non-commuting vertices
    assert len(wait) == 2
    for nf, d in wait.items():
        state = tuple(nf)
        lhs = d + core + invert_word(SPEC, d)
        assert equal(SPEC, lhs, state)


def test_cyclic_shuffle_class_respects_limit():
    tight = dataclasses.replace(SPEC, limits={"states": 1})
    with pytest.raises(BfsLimitExceeded):
        cyclic_shuffle_class(tight, W("a:1 b:1", tight))


def test_clf_upper_bound_values(gex, gex_s3, g510):
    assert clf_upper_bound(gex, 6) == 12
    assert clf_upper_bound(gex_s3, 6) == 13
    assert clf_upper_bound(g510, 14) == 58
    assert clf_upper_bound(gex, 0) == 0


def test_are_conjugate_swapped_word(gex):
    a = W("a:1 b:1 c:1")
    b = W("b:1 a:1 c:1")
    wit = are_conjugate(gex, a, b)
    assert wit is not None
    assert verify_witness(gex, a, b, wit.conjugator)
    assert wit.floating == ("c",)
    assert wit.bound == 12
    assert word_length(gex, wit.conjugator) <= wit.bound


def test_are_conjugate_rejects_inequivalent(gex):
    assert are_conjugate(gex, W("a:1"), W("b:1")) is None
    assert are_conjugate(gex, W("c:1"), W("c:2")) is None
    assert are_conjugate(gex, W("a:1 b:1"), W("a:1 b:1 a:1 b:1")) is None


def test_are_conjugate_identity_pair(gex):
    wit = are_conjugate(gex, (), ())
    assert wit is not None and wit.conjugator == ()


def test_are_conjugate_crosses_vertex_group_classes(g510):
    # conjugate table elements floating on c: needs the local witness
    a = W("c:r2", g510)
    b = W("c:r3", g510)
    wit = are_conjugate(g510, a, b)
    assert wit is not None
    assert verify_witness(g510, a, b, wit.conjugator)
    assert wit.floating == ("c",)
    assert are_conjugate(g510, W("c:r", g510), W("c:s", g510)) is None


def test_are_conjugate_example_pair(g510):
    a = W("e:1 a:1 b:2 c:r2 a:1 e:-1", g510)
    b = W("e:-1 b:1 a:2 c:r3 e:1 b:1", g510)
    wit = are_conjugate(g510, a, b)
    assert wit is not None
    assert verify_witness(g510, a, b, wit.conjugator)
    assert wit.floating == ("c",)
    assert wit.core_a == W("b:2 c:r2 a:2", g510)
    assert word_length(g510, wit.conjugator) <= wit.bound


def test_verify_witness_rejects_wrong_conjugator(gex):
    a = W("a:1 b:1 c:1")
    b = W("b:1 a:1 c:1")
    assert not verify_witness(gex, a, b, W("c:1"))
    assert verify_witness(gex, a, a, ())


def test_are_conjugate_propagates_state_limit(gex):
    tight = dataclasses.replace(gex, limits={"states": 1})
    with pytest.raises(BfsLimitExceeded):
        are_conjugate(tight, W("a:1 b:1", tight), W("b:1 a:1", tight))


@given(st.lists(st.sampled_from(syllable_pool(SPEC)), max_size=7).map(tuple))
def test_witness_round_trip_against_self_rotation(w):
    # every word is conjugate to the rotation by its first syllable
    if not w:
        return
    rot = w[1:] + (w[0],)
    wit = are_conjugate(SPEC, w, rot)
    assert wit is not None
    assert verify_witness(SPEC, w, rot, wit.conjugator)
    assert word_length(SPEC, wit.conjugator) <= wit.bound
