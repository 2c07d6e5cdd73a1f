import itertools

import pytest
from hypothesis import given, strategies as st

from kostka_shoji.multipartitions import (Multipartition, deinterleave, diff_alpha, dominates,
                                          enumerate_multipartitions, interleave, partial_sums,
                                          permutation_sign, rho, signed_weyl_images, weyl_elements)
from kostka_shoji.pseudoroots import xexp_of_alpha

P = Multipartition.parse


def test_interleave_order():
    assert interleave(P("3,1|2,0")) == (3, 2, 1, 0)
    assert deinterleave((3, 2, 1, 0), 2) == ((3, 1), (2, 0))


def test_dominance_examples():
    assert dominates(P("1,0|1,0"), P("1,1|0,0"))
    assert not dominates(P("1,1|0,0"), P("1,0|1,0"))
    assert dominates(P("2,0"), P("1,1"))
    # different totals are never comparable
    assert not dominates(P("2,0"), P("1,0"))


def test_diff_alpha_example():
    assert diff_alpha(P("1,0|1,0"), P("1,1|0,0")) == (0, 1, 0)
    with pytest.raises(ValueError):
        diff_alpha(P("2,0"), P("1,0"))


def test_parse_and_print():
    m = P("3,1|2", 3)
    assert m.rows == ((3, 1, 0), (2, 0, 0))
    assert str(P("3,1|2,0")) == "3,1|2,0"
    assert (m.r, m.N, m.total) == (2, 3, 6)


@pytest.mark.parametrize("text", ["1,2", "1,x", "3,1|2,0,0,0"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        P(text, 3 if "|" in text else None)


def test_unequal_component_lengths_rejected():
    with pytest.raises(ValueError):
        Multipartition(((1, 0), (1,)))


def test_generalized_entries_allowed():
    m = Multipartition(((3, -1),))
    assert m.total == 2
    assert dominates(m, P("1,1"))


def test_enumeration_counts():
    # r=2, N=2, total 2: (2|0),(1,1|0),(1|1),(0|2),(0|1,1)
    parts = enumerate_multipartitions(2, 2, 2)
    assert len(parts) == 5
    assert len(set(parts)) == 5
    assert len(enumerate_multipartitions(1, 5, 5)) == 7
    assert enumerate_multipartitions(3, 1, 0) == [Multipartition.zero(3, 1)]


def test_rho():
    assert rho(2, 3).rows == ((3, 2, 1), (3, 2, 1))


@pytest.mark.parametrize("r,total", [(r, n) for r in (1, 2, 3) for n in range(6)])
def test_dominance_is_partial_order(r, total):
    parts = enumerate_multipartitions(r, max(total, 1), total)
    sums = {m: partial_sums(m) for m in parts}

    def geq(a, b):
        return all(x >= y for x, y in zip(sums[a], sums[b]))

    for a in parts:
        assert dominates(a, a)
    for a, b in itertools.product(parts, repeat=2):
        assert dominates(a, b) == geq(a, b)
        if a != b and geq(a, b):
            assert not geq(b, a)
    if len(parts) <= 40:
        for a, b, c in itertools.product(parts, repeat=3):
            if geq(a, b) and geq(b, c):
                assert geq(a, c)


@pytest.mark.parametrize("r,total", [(1, 4), (2, 3), (3, 3)])
def test_diff_alpha_sign_matches_dominance(r, total):
    parts = enumerate_multipartitions(r, total, total)
    for a, b in itertools.product(parts, repeat=2):
        alpha = diff_alpha(a, b)
        assert all(x >= 0 for x in alpha) == dominates(a, b)
        # x^alpha equals x^{b - a} under delta_l -> x_l^{-1} x_{l+1}
        assert xexp_of_alpha(alpha) == tuple(y - x for x, y in zip(interleave(a), interleave(b)))


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((2, 0, 1)) == 1


@pytest.mark.parametrize("r,N", [(1, 3), (2, 2), (3, 2), (2, 3)])
def test_weyl_group_size_and_signs(r, N):
    elems = list(weyl_elements(r, N))
    size = 1
    for k in range(2, N + 1):
        size *= k
    assert len(elems) == size ** r
    assert sum(e.sign for e in elems) == (1 if N == 1 else 0)


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_signed_images_permute_within_components(r, N, data):
    v = data.draw(st.lists(st.integers(-3, 3), min_size=r * N, max_size=r * N))
    images = list(signed_weyl_images(v, r))
    for sign, image in images:
        for s in range(r):
            assert sorted(image[s::r]) == sorted(v[s::r])
    assert images[0] == (1, tuple(v))
    if N >= 2 and all(len(set(v[s::r])) == N for s in range(r)):
        # all images distinct: transposing two entries of one component flips the sign
        swapped = list(v)
        swapped[0], swapped[r] = swapped[r], swapped[0]
        signs = {img: sg for sg, img in images}
        assert signs[tuple(swapped)] == -1
