import pytest
from hypothesis import given, strategies as st

from heckewalk.perm import (
    apply_adjacent,
    check_perm,
    identity,
    inv_sequence,
    inverse,
    length,
    longest_element,
    pad,
    reduced_word,
)


@st.composite
def perms(draw, min_degree=1, max_degree=7):
    n = draw(st.integers(min_degree, max_degree))
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_and_position(draw):
    w = draw(perms(min_degree=2))
    k = draw(st.integers(1, len(w) - 1))
    return w, k


def test_identity_examples():
    assert identity(3) == (1, 2, 3)
    assert identity(1) == (1,)
    assert identity(4) == (1, 2, 3, 4)


def test_longest_element_examples():
    assert longest_element(3) == (3, 2, 1)
    assert longest_element(1) == (1,)
    assert longest_element(4) == (4, 3, 2, 1)


def test_apply_adjacent_examples():
    assert apply_adjacent((1, 2, 3), 1) == (2, 1, 3)
    assert apply_adjacent((2, 1, 3), 2) == (2, 3, 1)
    assert apply_adjacent((3, 2, 1), 1) == (2, 3, 1)


def test_apply_adjacent_rejects_bad_position():
    with pytest.raises(ValueError):
        apply_adjacent((1, 2, 3), 3)
    with pytest.raises(ValueError):
        apply_adjacent((1, 2, 3), 0)


def test_length_examples():
    assert length((1, 2, 3)) == 0
    assert length((3, 2, 1)) == 3
    assert length((2, 1, 3, 4)) == 1


def test_inv_sequence_examples():
    assert inv_sequence((1, 2, 3)) == (0, 0)
    assert inv_sequence((3, 1, 4, 2)) == (2, 0, 1)
    assert inv_sequence((3, 2, 1)) == (2, 1)


def test_inverse_examples():
    assert inverse((1, 2, 3)) == (1, 2, 3)
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert inverse((2, 1)) == (2, 1)


def test_reduced_word_examples():
    assert reduced_word((1, 2, 3)) == ()
    assert reduced_word((2, 1, 3)) == (1,)
    assert reduced_word((3, 2, 1)) == (1, 2, 1)


def test_pad_examples():
    assert pad((2, 1), 4) == (2, 1, 3, 4)
    assert pad((1,), 1) == (1,)
    assert pad((3, 1, 2), 4) == (3, 1, 2, 4)
    with pytest.raises(ValueError):
        pad((2, 1), 1)


def test_check_perm_rejects_junk():
    for bad in [(), (0, 1), (1, 1), (2, 3), (1, 2, 4)]:
        with pytest.raises(ValueError):
            check_perm(bad)


@given(perms())
def test_inverse_is_involutive(w):
    assert inverse(inverse(w)) == w
    assert length(inverse(w)) == length(w)


@given(perm_and_position())
def test_apply_adjacent_is_involutive(wk):
    w, k = wk
    assert apply_adjacent(apply_adjacent(w, k), k) == w


@given(perms())
def test_inv_sequence_sums_to_length(w):
    invs = inv_sequence(w)
    assert sum(invs) == length(w)
    assert all(0 <= invs[i] <= len(w) - 1 - i for i in range(len(invs)))


@given(perm_and_position())
def test_length_changes_by_one(wk):
    w, k = wk
    up = w[k - 1] < w[k]
    assert length(apply_adjacent(w, k)) == length(w) + (1 if up else -1)


@given(perm_and_position())
def test_inversion_statistics_under_one_swap(wk):
    # how inv at positions k, k+1 transforms under a single right swap
    w, k = wk
    ws = apply_adjacent(w, k)
    iw = inv_sequence(w) + (0,)
    iws = inv_sequence(ws) + (0,)
    if length(ws) == length(w) - 1:
        assert iw[k - 1] > iw[k]
        assert iws[k - 1] == iw[k]
        assert iws[k] == iw[k - 1] - 1
    else:
        assert iw[k - 1] <= iw[k]
        assert iws[k - 1] == iw[k] + 1
        assert iws[k] == iw[k - 1]


@given(perms())
def test_reduced_word_replays_to_w(w):
    word = reduced_word(w)
    assert len(word) == length(w)
    cur = identity(len(w))
    for k in word:
        cur = apply_adjacent(cur, k)
    assert cur == w


@given(perms(), st.integers(0, 3))
def test_pad_extends_inv_sequence_with_zeros(w, extra):
    m = len(w) + extra
    padded = pad(w, m)
    assert length(padded) == length(w)
    assert inv_sequence(padded) == inv_sequence(w) + (0,) * extra
