from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from fishburn import ascent, matching
from fishburn.matching import Matching, MatchingStats, echords, enumerate_stoimenow, is_stoimenow, matching_stats
from oracles import ASCENT_COUNTS, RUN_BOUNDED, literal_is_stoimenow, literal_perfect_matchings

EXAMPLE = Matching.of([(1, 4), (2, 6), (3, 9), (5, 13), (7, 10), (8, 11), (12, 14)])


@pytest.mark.parametrize("arcs, expected", [
    ([(1, 4), (2, 3)], False),
    ([(1, 2), (3, 4)], True),
    ([(1, 2)], True),
    ([(1, 3), (2, 4)], True),
    ([(1, 6), (2, 4), (3, 5)], False),
])
def test_is_stoimenow(arcs, expected):
    assert is_stoimenow(Matching.of(arcs)) is expected


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching.of([(1, 3)])
    with pytest.raises(ValueError):
        Matching(((2, 1),))
    with pytest.raises(ValueError):
        list(enumerate_stoimenow(-1))


@pytest.mark.parametrize("n", range(5))
def test_enumeration_matches_literal_filter(n):
    literal = {frozenset(m) for m in literal_perfect_matchings(n) if literal_is_stoimenow(m)}
    got = [frozenset(m.arcs) for m in enumerate_stoimenow(n)]
    assert len(got) == len(set(got))
    assert set(got) == literal


def test_counts():
    assert [sum(1 for _ in enumerate_stoimenow(n)) for n in range(7)] == ASCENT_COUNTS[:7]
    assert {m.arcs for m in enumerate_stoimenow(2)} == {((1, 2), (3, 4)), ((1, 3), (2, 4))}
    assert list(enumerate_stoimenow(0)) == [Matching(())]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_bounded_chain_counts(k):
    assert [sum(1 for _ in enumerate_stoimenow(n, k)) for n in range(7)] == RUN_BOUNDED[k][:7]


def test_similar_chains():
    assert matching.has_similar_chain([(1, 4), (2, 5), (3, 6)], 3)
    assert not matching.has_similar_chain([(1, 4), (2, 5), (3, 7)], 3)
    assert not matching.has_similar_chain([(1, 2)], 2)


@pytest.mark.parametrize("arcs, expected", [
    ([(1, 3), (2, 4)], 1),
    ([(1, 2), (3, 4)], 0),
    ([(1, 4), (2, 5), (3, 6)], 2),
])
def test_echords(arcs, expected):
    assert echords(Matching.of(arcs)) == expected


def test_example_stats():
    assert matching_stats(EXAMPLE) == MatchingStats(cruns=3, larcs=1, echords=1)
    assert matching_stats(Matching.of([(1, 2)])).cruns == 0
    with pytest.raises(ValueError):
        matching_stats(Matching(()))


def test_arc_right_of_top_opener_can_be_top_arc():
    # A* = (3, 4) and no other closer lies between 3 and 4, so A* follows itself
    assert matching_stats(Matching.of([(1, 2), (3, 4)])) == MatchingStats(1, 1, 0)
    assert matching_stats(Matching.of([(1, 2)])) == MatchingStats(0, 0, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_statistics_follow_ascent_distribution(n):
    from_ascent = Counter()
    for x in ascent.enumerate_ascent(n):
        s = ascent.stats(x)
        from_ascent[(s.asc, s.last, s.zeros)] += 1
    from_matchings = Counter(tuple(vars(matching_stats(m)).values()) for m in enumerate_stoimenow(n))
    assert from_matchings == from_ascent


def brute_echords(arcs):
    """Smallest removal leaving no pair (a,b),(a',b') whose relabeled ends are both adjacent."""
    def clean(kept):
        points = sorted(p for arc in kept for p in arc)
        pos = {p: i for i, p in enumerate(points)}
        return not any(abs(pos[a] - pos[c]) == 1 and abs(pos[b] - pos[d]) == 1 and (a - c) * (b - d) > 0
                       for (a, b), (c, d) in combinations(kept, 2))
    return next(size for size in range(len(arcs) + 1)
                for removed in combinations(arcs, size)
                if clean([arc for arc in arcs if arc not in removed]))


@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(list(enumerate_stoimenow(n)))))
def test_echords_against_pairwise_scan(m):
    assert echords(m) == brute_echords(list(m.arcs))
