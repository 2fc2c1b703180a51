"""Stoimenow matchings of [2n] and their statistics."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

Arc = tuple[int, int]


@dataclass(frozen=True)
class Matching:
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        points = sorted(p for arc in self.arcs for p in arc)
        if points != list(range(1, 2 * len(self.arcs) + 1)):
            raise ValueError("arcs must partition 1..2n")
        if any(a >= b for a, b in self.arcs):
            raise ValueError("arcs are written (opener, closer) with opener < closer")

    @classmethod
    def of(cls, arcs: Iterable[Iterable[int]]) -> Matching:
        return cls(tuple(sorted(tuple(sorted(arc)) for arc in arcs)))

    @property
    def n(self) -> int:
        return len(self.arcs)

    def closers(self) -> frozenset[int]:
        return frozenset(b for _, b in self.arcs)


def _violates(first: Arc, second: Arc) -> bool:
    (a, b), (c, d) = first, second
    return (a == c + 1 and b < d) or (a < c and b == d + 1)


def is_stoimenow(m: Matching) -> bool:
    return not any(_violates(p, q) or _violates(q, p) for p, q in combinations(m.arcs, 2))


def has_similar_chain(arcs: Iterable[Arc], length: int) -> bool:
    """True iff some ``(i, j), (i+1, j+1), ..., (i+length-1, j+length-1)`` all occur."""
    arc_set = set(arcs)
    return any(all((i + s, j + s) in arc_set for s in range(length)) for i, j in arc_set)


def _all_matchings(points: list[int]) -> Iterator[list[Arc]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx, partner in enumerate(rest):
        for tail in _all_matchings(rest[:idx] + rest[idx + 1:]):
            yield [(first, partner)] + tail


def enumerate_stoimenow(n: int, max_chain: int | None = None) -> Iterator[Matching]:
    """Stoimenow matchings of [2n]; with ``max_chain=k`` no k+1 arcs form a similar chain."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for arcs in _all_matchings(list(range(1, 2 * n + 1))):
        m = Matching.of(arcs)
        if not is_stoimenow(m):
            continue
        if max_chain is not None and has_similar_chain(m.arcs, max_chain + 1):
            continue
        yield m


def _standardized(arcs: Iterable[Arc]) -> list[Arc]:
    arcs = list(arcs)
    rank = {p: i for i, p in enumerate(sorted(p for arc in arcs for p in arc), start=1)}
    return [(rank[a], rank[b]) for a, b in arcs]


def echords(m: Matching) -> int:
    """Fewest arcs to delete so the relabeled remainder has no similar pair."""
    for size in range(m.n + 1):
        for removed in combinations(m.arcs, size):
            kept = [arc for arc in m.arcs if arc not in removed]
            if not has_similar_chain(_standardized(kept), 2):
                return size
    raise AssertionError("unreachable: removing every arc always works")


def _closer_runs_before(m: Matching, point: int) -> int:
    closers = m.closers()
    runs = 0
    for p in range(1, point):
        if p in closers and p - 1 not in closers:
            runs += 1
    return runs


@dataclass(frozen=True)
class MatchingStats:
    cruns: int
    larcs: int
    echords: int


def matching_stats(m: Matching) -> MatchingStats:
    if m.n == 0:
        raise ValueError("statistics undefined on the empty matching")
    top = next(arc for arc in m.arcs if arc[1] == 2 * m.n)
    # closer directly right of A*'s opener; when that is A*'s own closer the arc is A* itself
    nxt = min(b for _, b in m.arcs if b > top[0])
    follower = next(arc for arc in m.arcs if arc[1] == nxt)
    return MatchingStats(
        cruns=_closer_runs_before(m, top[0]),
        larcs=_closer_runs_before(m, follower[0]),
        echords=echords(m),
    )
