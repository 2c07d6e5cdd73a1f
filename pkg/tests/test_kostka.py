import pytest
from hypothesis import given, settings, strategies as st

from kostka_shoji.kostka import kostka, kostka_diagonal, kostka_single, kostka_table, weyl_alphas
from kostka_shoji.multipartitions import (Multipartition, diff_alpha, enumerate_multipartitions, interleave,
                                          rho, signed_weyl_images)
from kostka_shoji.polyring import TPoly, specialize_diagonal
from kostka_shoji.pseudoroots import build_system, partition_function

P = Multipartition.parse
t = TPoly.var(1, 1)
t1, t2 = TPoly.var(2, 1), TPoly.var(2, 2)


@pytest.mark.parametrize("lam, mu, expected", [
    ("2,0", "1,1", t),
    ("2,1,0", "1,1,1", t + t * t),
    ("3,0,0", "1,1,1", t ** 3),
    ("1|0", "0|1", t1),
    ("2|0", "0|2", t1 * t1),
    ("1,0|1,0", "1,1|0,0", t2),
    ("1,1", "1,1", TPoly.one(1)),
])
def test_examples(lam, mu, expected):
    lam, mu = P(lam), P(mu)
    got = kostka(lam, mu).poly
    if expected.r != got.r:
        got = specialize_diagonal(got)
    assert got == expected


def test_single_examples():
    lam = P("1,0|1,0")
    assert kostka_single(lam, lam) == TPoly.one(1)
    assert kostka_single(P("2|0"), P("0|2")) == t * t


def test_mismatched_input_rejected():
    with pytest.raises(ValueError):
        kostka(P("2,0"), P("1,0"))
    with pytest.raises(ValueError):
        kostka(P("1,0"), P("1|0"))


def test_result_metadata():
    res = kostka(P("2,1,0"), P("1,1,1"))
    assert res.poly.r == 1
    assert res.meta.weyl_terms == 1  # every other image has a negative prefix sum
    assert res.meta.l_lookups == res.meta.weyl_terms
    assert res.lambda_ == P("2,1,0")


def _unpruned(lam, mu):
    """The alternating sum straight from the definition, without pruning."""
    sys = build_system(lam.r, lam.N)
    shifted = [a + b for a, b in zip(interleave(lam), interleave(rho(lam.r, lam.N)))]
    base = [a + b for a, b in zip(interleave(rho(lam.r, lam.N)), interleave(mu))]
    acc = TPoly.zero(lam.r)
    for sign, image in signed_weyl_images(shifted, lam.r):
        v = [a - b for a, b in zip(image, base)]
        alpha, run = [], 0
        for x in v[:-1]:
            run += x
            alpha.append(run)
        acc = acc + TPoly.constant(lam.r, sign) * partition_function(sys, alpha)
    return acc


@pytest.mark.parametrize("r,N,total", [(1, 3, 3), (2, 2, 2), (2, 2, 3), (3, 2, 2)])
def test_pruning_matches_unpruned_sum(r, N, total):
    parts = enumerate_multipartitions(r, N, total)
    for lam in parts:
        for mu in parts:
            assert kostka(lam, mu).poly == _unpruned(lam, mu), (lam, mu)


def test_weyl_alphas_identity_term():
    lam, mu = P("2,1|1,0"), P("1,1|1,1")
    terms = list(weyl_alphas(lam, mu))
    assert (1, diff_alpha(lam, mu)) in terms
    assert all(all(a >= 0 for a in alpha) for _, alpha in terms)


@st.composite
def pairs(draw):
    r = draw(st.integers(1, 3))
    total = draw(st.integers(0, 4))
    parts = enumerate_multipartitions(r, max(total, 1), total)
    return draw(st.sampled_from(parts)), draw(st.sampled_from(parts))


@given(pairs())
@settings(max_examples=60, deadline=None)
def test_diagonal_matches_single(pair):
    lam, mu = pair
    assert kostka_diagonal(lam, mu) == kostka_single(lam, mu)


@given(pairs())
@settings(max_examples=60, deadline=None)
def test_constant_term_is_delta(pair):
    lam, mu = pair
    assert kostka(lam, mu).poly.constant_term() == (1 if lam == mu else 0)


def test_table_r1_total2():
    table = kostka_table(1, 2, 2)
    assert table == {(P("1,1"), P("1,1")): TPoly.one(1), (P("2,0"), P("1,1")): t,
                     (P("2,0"), P("2,0")): TPoly.one(1)}
    assert list(table) == sorted(table)


def test_table_total0():
    table = kostka_table(2, 1, 0)
    assert list(table.values()) == [TPoly.one(2)]


def test_table_r2_total1():
    table = kostka_table(2, 1, 1)
    assert table == {(P("0|1"), P("0|1")): TPoly.one(2), (P("1|0"), P("0|1")): t1,
                     (P("1|0"), P("1|0")): TPoly.one(2)}


def test_table_all_pairs_contains_zeros():
    full = kostka_table(2, 1, 1, include_all=True)
    assert full[(P("0|1"), P("1|0"))] == TPoly.zero(2)
    assert len(full) == 4


def test_table_parallel_matches_serial():
    assert kostka_table(2, 2, 3, threads=2) == kostka_table(2, 2, 3)
