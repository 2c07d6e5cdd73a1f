import random

import pytest
from hypothesis import given, settings, strategies as st

from kostka_shoji.affinewords import (AffinePermutation, ArcError, FlagType, build_word_sequence,
                                      compose, concatenated_word, dims_check, is_reduced, length,
                                      parabolic_longest_word, random_flag_type, standard_flag_type)

A = AffinePermutation


def inversions(w: AffinePermutation) -> int:
    """Count pairs (i, j), 1 <= i <= d, i < j, with w(i) > w(j) by direct search."""
    d = w.d
    spread = max(abs(w(u) - u) for u in range(1, d + 1))
    return sum(1 for i in range(1, d + 1) for j in range(i + 1, i + 2 * spread + d + 1) if w(i) > w(j))


@st.composite
def affine_perms(draw, max_d=8, max_word=12):
    d = draw(st.integers(2, max_d))
    word = draw(st.lists(st.integers(0, d - 1), max_size=max_word))
    return A.from_word(d, word)


def test_identity_and_simple_lengths():
    assert length(A.identity(5)) == 0
    for d in range(2, 7):
        for i in range(d):
            assert length(A.simple(d, i)) == 1


def test_s0_swaps_0_and_1():
    s0 = A.simple(3, 0)
    assert s0.window == (0, 2, 4)
    assert s0(0) == 1 and s0(1) == 0


def test_d2_example():
    assert A.from_word(2, [0, 1, 0]).length() == 3


def test_invalid_windows():
    with pytest.raises(ValueError):
        A(3, (1, 1, 3))
    with pytest.raises(ValueError):
        A(3, (2, 3, 4))  # shift: extended affine group only
    with pytest.raises(ValueError):
        A(3, (1, 2))


@given(affine_perms())
@settings(max_examples=200)
def test_length_matches_inversion_count(w):
    assert w.length() == inversions(w)


@given(affine_perms(), st.data())
@settings(max_examples=200)
def test_coxeter_length_changes_by_one(w, data):
    i = data.draw(st.integers(0, w.d - 1))
    assert abs(w.compose(A.simple(w.d, i)).length() - w.length()) == 1
    assert abs(w.apply_simple(i).length() - w.length()) == 1


@given(affine_perms(), affine_perms())
def test_compose_is_associative_with_simple(w, v):
    if w.d != v.d:
        return
    s = A.simple(w.d, 1)
    assert compose(compose(w, v), s) == compose(w, compose(v, s))


def test_from_word_is_product():
    d = 4
    w = A.from_word(d, [1, 2, 0])
    assert w == A.simple(d, 1) * A.simple(d, 2) * A.simple(d, 0)


@pytest.mark.parametrize("word, d, expected", [
    ([], 3, True), ([1, 1], 3, False), ([1, 2, 1], 4, True), ([0, 1, 0, 1], 2, True),
    ([1, 2, 1, 2], 4, False),
])
def test_is_reduced(word, d, expected):
    assert is_reduced(word, d) is expected


def test_is_reduced_needs_d2():
    with pytest.raises(ValueError):
        is_reduced([], 1)


def test_parabolic_examples():
    assert parabolic_longest_word([3], 5) == [3]
    assert parabolic_longest_word([1, 2], 5) == [1, 2, 1]
    w = parabolic_longest_word([6, 7, 0], 8)
    assert len(w) == 6 and is_reduced(w, 8)


@pytest.mark.parametrize("residues, d", [([1, 3], 5), ([0, 1, 2], 3), ([1, 1], 4)])
def test_parabolic_rejects(residues, d):
    with pytest.raises(ValueError):
        parabolic_longest_word(residues, d)


@pytest.mark.parametrize("d", [3, 5, 8])
def test_parabolic_is_longest(d):
    for start in range(d):
        for k in range(1, d):
            arc = [(start + j) % d for j in range(k)]
            w = A.from_word(d, parabolic_longest_word(arc, d))
            assert w.length() == k * (k + 1) // 2
            assert w * w == A.identity(d)
            for i in arc:
                assert w.compose(A.simple(d, i)).length() == w.length() - 1


def test_flag_type_validation():
    ft = FlagType(2, (1, 2, 1), (1, 2, 3))
    assert ft.dims == (4, 2) and ft.d == 6 and ft.length == 3
    with pytest.raises(ValueError):
        FlagType(2, (1, 3), (1, 1))
    with pytest.raises(ValueError):
        FlagType(2, (1, 2), (1, 0))
    with pytest.raises(ValueError):
        FlagType(2, (1, 2), (1, 1), dims=(2, 1))


def test_empty_flag_type():
    assert build_word_sequence(FlagType(2, (), ())) == []


def test_standard_flag_type_r2_n2():
    ft = standard_flag_type(2, 2)
    assert ft.i_seq == (2, 1, 2, 1) and ft.dims == (2, 2)
    blocks = build_word_sequence(ft)
    assert [b.n for b in blocks] == [4, 3, 2, 1]
    assert all(b.reduced and len(b.word) == b.size * (b.size + 1) // 2 for b in blocks)
    # golden value from the first verified run
    assert len(concatenated_word(blocks)) == 8


@pytest.mark.parametrize("r,N,total", [(2, 3, 27), (3, 3, 45), (1, 3, 9), (1, 1, 0)])
def test_standard_flag_totals(r, N, total):
    blocks = build_word_sequence(standard_flag_type(r, N))
    assert all(b.reduced for b in blocks)
    assert len(concatenated_word(blocks)) == total


def test_arc_error_reports_block():
    # dims (0,0,1,3), d=4: block 2 sits at vertex 3 on [D(3)+1, D(4)-1+3] = [2, 6]
    with pytest.raises(ArcError) as exc:
        build_word_sequence(FlagType(4, (4, 3), (3, 1)))
    assert exc.value.n == 2


def test_random_flag_types_seeded():
    rng = random.Random(7)
    seen = 0
    while seen < 30:
        ft = random_flag_type(rng)
        assert 2 <= ft.d <= 8 and ft.length <= 6
        try:
            blocks = build_word_sequence(ft)
        except ArcError:
            continue
        seen += 1
        for b in blocks:
            assert b.reduced and len(b.word) == b.size * (b.size + 1) // 2
            assert b.size < ft.d


@pytest.mark.parametrize("r,N,roots", [(2, 2, 4), (1, 5, 10), (3, 1, 2)])
def test_dims_examples(r, N, roots):
    rep = dims_check(r, N)
    assert rep.ok and rep.root_count == roots


def test_dims_all():
    for r in range(1, 7):
        for N in range(1, 7):
            rep = dims_check(r, N)
            assert rep.ok
            assert rep.total_dim == rep.flag_dim + rep.root_count
