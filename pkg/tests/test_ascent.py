import pytest
from hypothesis import given, strategies as st

from fishburn import ascent
from oracles import ASCENT_COUNTS, RUN_BOUNDED, literal_ascent_sequences, literal_is_ascent, literal_run_bounded


@pytest.mark.parametrize("seq, expected", [
    ((0, 1, 0, 2, 3, 1, 0, 0, 2), True),
    ((), True),
    ((0,), True),
    ((1, 0), False),
    ((0, 2), False),
    ((0, 1, 2, 4), False),
])
def test_validate(seq, expected):
    assert ascent.validate(seq) is expected


def test_oracle_tables_are_current():
    assert [len(literal_ascent_sequences(n)) for n in range(8)] == ASCENT_COUNTS[:8]
    for k, counts in RUN_BOUNDED.items():
        assert [len(literal_run_bounded(n, k)) for n in range(8)] == counts[:8]


@pytest.mark.parametrize("n", range(8))
def test_enumerate_matches_literal_filter(n):
    got = list(ascent.enumerate_ascent(n))
    assert got == sorted(literal_ascent_sequences(n))
    assert len(got) == ASCENT_COUNTS[n]


def test_enumerate_small():
    assert list(ascent.enumerate_ascent(2)) == [(0, 0), (0, 1)]
    assert len(list(ascent.enumerate_ascent(5))) == 53
    assert list(ascent.enumerate_ascent(0)) == [()]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_run_bounded_enumeration(k):
    for n in range(9):
        assert sum(1 for _ in ascent.enumerate_ascent(n, k)) == RUN_BOUNDED[k][n]


def test_primitive_length_four():
    assert list(ascent.enumerate_ascent(4, 1)) == [
        (0, 1, 0, 1), (0, 1, 0, 2), (0, 1, 2, 0), (0, 1, 2, 1), (0, 1, 2, 3)]


def test_enumerate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        list(ascent.enumerate_ascent(-1))
    with pytest.raises(ValueError):
        list(ascent.enumerate_ascent(3, 0))


def test_stats():
    assert ascent.zeros((0, 0, 0, 0, 0, 1, 1, 2, 1, 1)) == 6
    s = ascent.stats((0, 1, 1, 0, 2, 0, 1))
    assert (s.asc, s.last, s.zeros, s.max_run, s.is_primitive) == (3, 1, 1, 2, False)
    s = ascent.stats((0,))
    assert (s.asc, s.last, s.zeros, s.is_primitive) == (0, 0, 0, True)
    with pytest.raises(ValueError):
        ascent.stats(())
    assert (ascent.asc(()), ascent.zeros(()), ascent.max_run(())) == (0, 0, 0)


def test_run_decomposition_worked_example():
    d = ascent.run_decomposition((0, 0, 1, 1, 1, 0, 2, 2, 3, 1, 1, 0, 4))
    assert d.skeleton == (0, 1, 0, 2, 3, 1, 0, 4)
    assert d.multiplicities == (2, 3, 1, 2, 1, 2, 1, 1)
    assert ascent.run_decomposition((0,)) == ascent.RunDecomposition((0,), (1,))
    assert ascent.run_decomposition((0, 0, 0)) == ascent.RunDecomposition((0,), (3,))
    with pytest.raises(ValueError):
        ascent.run_decomposition(())


@pytest.mark.parametrize("n", range(1, 8))
def test_run_properties_exhaustive(n):
    for x in ascent.enumerate_ascent(n):
        d = ascent.run_decomposition(x)
        assert d.expand() == x
        assert sum(d.multiplicities) == n
        assert ascent.validate(d.skeleton)
        assert ascent.stats(d.skeleton).is_primitive
        s = ascent.stats(x)
        assert s.zeros == n - len(d.skeleton)
        assert s.is_primitive == (s.max_run == 1) == (s.zeros == 0)


ascent_like = st.lists(st.integers(0, 6), max_size=9).map(tuple)


@given(ascent_like)
def test_validate_agrees_with_definition(seq):
    assert ascent.validate(seq) == literal_is_ascent(seq)


@given(st.integers(1, 6), st.data())
def test_enumeration_is_lexicographic_and_valid(n, data):
    seqs = list(ascent.enumerate_ascent(n))
    i = data.draw(st.integers(0, len(seqs) - 1))
    assert ascent.validate(seqs[i])
    assert seqs == sorted(seqs)
