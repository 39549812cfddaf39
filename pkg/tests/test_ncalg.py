import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracle import eval_scalar, eval_tensor, relerr, star_coords, symmetric_matrices, times_coords, trace_coords

from ncrg.ncalg import (
    N_SYMBOL,
    UNIT_STAR,
    UNIT_TIMES,
    NCPoly,
    Signature,
    TensorPoly,
    canonical_cyclic,
    letter_degrees,
    star,
    times,
    trace,
    trace_tensor,
    tsum,
    word,
    word_str,
)
from ncrg.scalar import Scalar

words2 = st.lists(st.integers(0, 1), max_size=4).map(tuple)


@st.composite
def tensors(draw, max_terms=3):
    parts = []
    for _ in range(draw(st.integers(1, max_terms))):
        c = Scalar.const(draw(st.integers(-3, 3)) or 1)
        if draw(st.booleans()):
            c = c * trace(draw(words2))
        parts.append(TensorPoly.mono(draw(words2), draw(words2), draw(st.booleans()), c))
    return tsum(parts)


def test_words_and_signature():
    assert word("AABB") == (0, 0, 1, 1)
    assert word("1") == () and word("") == ()
    assert word("XX") == word("AA")
    assert word_str(word("ABBA")) == "ABBA"
    assert letter_degrees(word("AAB"), 2) == (2, 1)
    assert Signature.from_pq(1, 1).e == (1, -1)
    with pytest.raises(ValueError):
        Signature.from_pq(2, 1)
    with pytest.raises(ValueError):
        Signature((1, 0))


def test_trace_of_unit_is_N_and_cyclic_names():
    assert trace(()) == Scalar.symbol(N_SYMBOL)
    assert trace(word("BAAB")) == trace(word("AABB")) == trace(word("BBAA"))


@given(st.lists(st.integers(0, 2), min_size=1, max_size=7).map(tuple), st.integers(0, 6))
def test_canonical_cyclic_invariant_under_rotation_and_reversal(w, k):
    k %= len(w)
    rot = w[k:] + w[:k]
    assert canonical_cyclic(rot) == canonical_cyclic(w)
    assert canonical_cyclic(tuple(reversed(w))) == canonical_cyclic(w)
    assert canonical_cyclic(canonical_cyclic(w)) == canonical_cyclic(w)


def test_star_unit_and_times_unit():
    for x in (TensorPoly.parse("AB⊗τB"), TensorPoly.parse("A⊗BB")):
        assert star(UNIT_STAR, x) == x and star(x, UNIT_STAR) == x
        assert times(UNIT_TIMES, x) == x and times(x, UNIT_TIMES) == x
    assert times(UNIT_STAR, UNIT_STAR) == UNIT_TIMES
    assert star(UNIT_STAR, UNIT_STAR) == UNIT_STAR


@given(tensors(), tensors(), tensors())
@settings(max_examples=60, deadline=None)
def test_star_associative(x, y, z):
    assert star(star(x, y), z) == star(x, star(y, z))


@given(tensors(), tensors(), tensors())
@settings(max_examples=40, deadline=None)
def test_times_associative(x, y, z):
    assert times(times(x, y), z) == times(x, times(y, z))


@given(tensors())
@settings(max_examples=40, deadline=None)
def test_flip_involution(x):
    assert x.flip().flip() == x


@given(tensors(2), tensors(2), st.integers(0, 3))
@settings(max_examples=30, deadline=None)
def test_products_and_trace_match_matrix_realization(x, y, seed):
    mats = symmetric_matrices(2, 5, seed)
    ex, ey = eval_tensor(x, mats), eval_tensor(y, mats)
    assert relerr(eval_tensor(star(x, y), mats), star_coords(ex, ey)) <= 1e-10
    assert relerr(eval_tensor(times(x, y), mats), times_coords(ex, ey)) <= 1e-10
    assert relerr(eval_scalar(trace_tensor(x), mats), trace_coords(ex)) <= 1e-10


def test_ncpoly_product_and_trace():
    p = NCPoly.from_words(word("AB"), word("BA"))
    q = NCPoly.from_words(word("A"))
    assert (p * q) == NCPoly.from_words(word("ABA"), word("BAA"))
    assert (p * q).trace() == trace(word("AAB")) * 2
