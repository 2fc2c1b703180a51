from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from fishburn import ascent, perm
from oracles import ASCENT_COUNTS, RUN_BOUNDED, literal_ascents, literal_in_R


def p(word):
    return tuple(int(c) for c in str(word))


def test_standardize():
    assert perm.standardize(p(39685)) == p(15342)
    assert perm.standardize(p(2413)) == p(2413)
    assert perm.standardize((7,)) == (1,)
    with pytest.raises(ValueError):
        perm.standardize((1, 1))


@pytest.mark.parametrize("word, expected", [(546123, False), (12345, True), (6417325, True), (231, False), (1, True)])
def test_in_R(word, expected):
    assert perm.in_R(p(word)) is expected


@pytest.mark.parametrize("n", range(8))
def test_in_R_agrees_with_literal_scan(n):
    members = [q for q in permutations(range(1, n + 1)) if literal_in_R(q)]
    assert len(members) == ASCENT_COUNTS[n]
    assert members == list(perm.enumerate_R(n))


def test_in_R_k():
    assert not perm.in_R_k(p(546123), 1)
    assert perm.in_R_k(p(123456), 1)
    assert perm.in_R_k(p(321), 3)
    assert not perm.in_R_k(p(321), 2)
    with pytest.raises(ValueError):
        perm.in_R_k(p(12), 0)
    assert perm.in_T(p(1423)) and not perm.in_T(p(6417325))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_bounded_class_sizes(k):
    assert [sum(1 for _ in perm.enumerate_R(n, k)) for n in range(8)] == RUN_BOUNDED[k][:8]


def test_adjdes():
    assert perm.adjdes(p(2543176)) == 3
    assert perm.adjdes(p(6417325)) == 1
    assert perm.adjdes(p(1234)) == 0


def test_active_sites_and_label():
    assert perm.active_sites(p(6132547)) == [0, 2, 4, 6, 7]
    assert perm.b_label(p(6132547)) == 3
    assert perm.active_sites((1,)) == [0, 1]
    assert perm.b_label((1,)) == 0
    with pytest.raises(ValueError):
        perm.active_sites(p(231))
    with pytest.raises(ValueError):
        perm.b_label(())


def test_upsilon_and_lambda_examples():
    assert perm.upsilon((0, 1, 1, 0, 2, 0, 1)) == p(6417325)
    assert perm.lambda_(p(6417325)) == (0, 1, 1, 0, 2, 0, 1)
    assert perm.upsilon((0,)) == (1,)
    assert perm.lambda_((1,)) == (0,)
    with pytest.raises(ValueError):
        perm.upsilon((0, 2))
    with pytest.raises(ValueError):
        perm.lambda_(p(231))


@pytest.mark.parametrize("n", range(1, 8))
def test_upsilon_bijection_and_statistics(n):
    images = set()
    for x in ascent.enumerate_ascent(n):
        q = perm.upsilon(x)
        assert perm.lambda_(q) == x
        assert perm.in_R(q)
        images.add(q)
        # the active sites of an image correspond to the legal next letters
        assert len(perm.active_sites(q)) == 2 + ascent.asc(x)
        assert perm.b_label(q) == x[-1]
        assert literal_ascents(perm.inverse(q)) == ascent.asc(x)
        assert perm.adjdes(q) == ascent.zeros(x)
        for k in (1, 2, 3):
            assert perm.in_R_k(q, k) == (ascent.max_run(x) <= k)
    assert images == set(perm.enumerate_R(n))


@given(st.permutations(range(1, 8)))
def test_inverse_is_involution(q):
    q = tuple(q)
    assert perm.inverse(perm.inverse(q)) == q
    assert perm.in_R(q) == literal_in_R(q)


@given(st.lists(st.integers(-50, 50), unique=True, max_size=8))
def test_standardize_preserves_relative_order(word):
    s = perm.standardize(word)
    assert sorted(s) == list(range(1, len(word) + 1))
    assert all((a < b) == (c < d) for a, c in zip(word, s) for b, d in zip(word, s))
