"""(2+2)-free posets held in their (down-set chain, level list) normal form.

Elements are labeled ``1..n``. An element at level ``i`` has strict down-set
``down_chain[i]``; the chain is strictly increasing under inclusion and
starts with the empty set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Collection, Iterable, Mapping, Sequence

from fishburn import ascent


@dataclass(frozen=True)
class IntervalOrder:
    n: int
    down_chain: tuple[frozenset[int], ...]
    levels: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n == 0:
            if self.down_chain or self.levels:
                raise ValueError("empty poset carries no levels")
            return
        if len(self.down_chain) != len(self.levels):
            raise ValueError("down chain and level list differ in length")
        if self.down_chain[0]:
            raise ValueError("lowest down-set must be empty")
        if any(not a < b for a, b in zip(self.down_chain, self.down_chain[1:])):
            raise ValueError("down-sets must increase strictly")
        seen: set[int] = set()
        for level in self.levels:
            if not level or seen & level:
                raise ValueError("levels must be nonempty and disjoint")
            seen |= level
        if seen != set(range(1, self.n + 1)):
            raise ValueError("levels must partition 1..n")

    @classmethod
    def singleton(cls) -> IntervalOrder:
        return cls(1, (frozenset(),), (frozenset({1}),))

    @classmethod
    def empty(cls) -> IntervalOrder:
        return cls(0, (), ())

    @classmethod
    def from_down_sets(cls, down: Mapping[int, Collection[int]]) -> IntervalOrder:
        """Build from a map ``element -> strict down-set`` over labels ``1..n``.

        Raises ``ValueError`` if the down-sets are not linearly ordered by
        inclusion, i.e. the poset is not (2+2)-free.
        """
        n = len(down)
        if set(down) != set(range(1, n + 1)):
            raise ValueError("elements must be labeled 1..n")
        if not is_two_plus_two_free(n, {(x, y) for y, ds in down.items() for x in ds}):
            raise ValueError("relation is not a (2+2)-free order")
        chain = sorted({frozenset(ds) for ds in down.values()}, key=len)
        index = {d: i for i, d in enumerate(chain)}
        levels = [set() for _ in chain]
        for x, ds in down.items():
            levels[index[frozenset(ds)]].add(x)
        return cls(n, tuple(chain), tuple(frozenset(level) for level in levels))

    @cached_property
    def level_of(self) -> dict[int, int]:
        return {x: i for i, level in enumerate(self.levels) for x in level}

    @property
    def num_levels(self) -> int:
        """Index of the highest level (``levels(P)``)."""
        return len(self.levels) - 1

    def down_set(self, x: int) -> frozenset[int]:
        return self.down_chain[self.level_of[x]]

    def precedes(self, x: int, y: int) -> bool:
        return x in self.down_set(y)

    def relation(self) -> set[tuple[int, int]]:
        return {(x, y) for y in range(1, self.n + 1) for x in self.down_set(y)}

    @cached_property
    def up_sets(self) -> dict[int, frozenset[int]]:
        up: dict[int, set[int]] = {x: set() for x in range(1, self.n + 1)}
        for x, y in self.relation():
            up[x].add(y)
        result = {x: frozenset(s) for x, s in up.items()}
        distinct = sorted(set(result.values()), key=len)
        assert all(a < b for a, b in zip(distinct, distinct[1:])), "up-sets not a chain"
        return result

    def maximal_elements(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.down_chain[-1]

    def minmax(self) -> int:
        return min(self.level_of[x] for x in self.maximal_elements())

    def srank(self) -> int:
        # a maximal element with the smallest strict down-set
        bottom = min(self.maximal_elements(), key=lambda x: len(self.down_set(x)))
        return self.level_of[bottom]

    def indistinguishable_classes(self) -> list[frozenset[int]]:
        classes: dict[tuple[frozenset[int], frozenset[int]], set[int]] = {}
        for x in range(1, self.n + 1):
            classes.setdefault((self.down_set(x), self.up_sets[x]), set()).add(x)
        return sorted((frozenset(c) for c in classes.values()), key=min)

    def add_element(self, i: int) -> IntervalOrder:
        """Add element ``n+1`` so that the result has ``srank`` equal to ``i``."""
        k = self.num_levels
        if self.n == 0:
            raise ValueError("cannot grow the empty poset; start from singleton()")
        if not 0 <= i <= k + 1:
            raise ValueError(f"level {i} outside [0, {k + 1}]")
        new = self.n + 1
        down, levels = list(self.down_chain), list(self.levels)
        if i <= self.srank():
            levels[i] = levels[i] | {new}
        elif i == k + 1:
            down.append(frozenset(range(1, new)))
            levels.append(frozenset({new}))
        else:
            lower = frozenset().union(*levels[:i])
            covered = lower - down[k]
            down = down[: i + 1] + [d | covered for d in down[i:]]
            levels = levels[:i] + [frozenset({new})] + levels[i:]
        return IntervalOrder(new, tuple(down), tuple(levels))


def build(x: Sequence[int]) -> IntervalOrder:
    """Poset obtained by feeding ``x_2, ..., x_n`` to ``add_element``."""
    if len(x) == 0 or not ascent.validate(x):
        raise ValueError(f"not a nonempty ascent sequence: {tuple(x)}")
    poset = IntervalOrder.singleton()
    for letter in x[1:]:
        poset = poset.add_element(letter)
    return poset


@dataclass(frozen=True)
class PosetStats:
    levels: int
    srank: int
    minmax: int
    maxindist: int
    rep: int


def poset_stats(poset: IntervalOrder) -> PosetStats:
    if poset.n == 0:
        raise ValueError("statistics undefined on the empty poset")
    classes = poset.indistinguishable_classes()
    return PosetStats(
        levels=poset.num_levels,
        srank=poset.srank(),
        minmax=poset.minmax(),
        maxindist=max(len(c) for c in classes),
        rep=poset.n - len(classes),
    )


def _check_order(n: int, rel: set[tuple[int, int]]) -> None:
    for a, b in rel:
        if a == b or (b, a) in rel:
            raise ValueError("relation is not irreflexive and antisymmetric")
    succ: dict[int, set[int]] = {x: set() for x in range(1, n + 1)}
    for a, b in rel:
        succ[a].add(b)
    for a, b in rel:
        if not succ[b] <= succ[a]:
            raise ValueError("relation is not transitive")


def is_two_plus_two_free(n: int, relation: Iterable[tuple[int, int]]) -> bool:
    """True iff no four points induce two disjoint incomparable 2-chains."""
    rel = set(relation)
    _check_order(n, rel)

    def comparable(p: int, q: int) -> bool:
        return (p, q) in rel or (q, p) in rel

    pairs = sorted(rel)
    for (a, b), (c, d) in combinations(pairs, 2):
        if len({a, b, c, d}) < 4:
            continue
        if not any(comparable(p, q) for p in (a, b) for q in (c, d)):
            return False
    return True


CanonicalForm = tuple[tuple[int, int], ...]


def canonical_form(poset: IntervalOrder) -> CanonicalForm:
    """Sorted (down level, up level) pairs; an isomorphism-class key."""
    ups = poset.up_sets
    up_chain = {u: i for i, u in enumerate(sorted(set(ups.values()), key=len))}
    return tuple(sorted((poset.level_of[x], up_chain[ups[x]]) for x in range(1, poset.n + 1)))


def is_isomorphic(p: IntervalOrder, q: IntervalOrder) -> bool:
    """Exhaustive label-bijection search; independent of ``canonical_form``."""
    if p.n != q.n:
        return False
    rel_p, rel_q = p.relation(), q.relation()
    if len(rel_p) != len(rel_q):
        return False
    n = p.n

    def profile(rel: set[tuple[int, int]], x: int) -> tuple[int, int]:
        return (sum(1 for a, b in rel if b == x), sum(1 for a, b in rel if a == x))

    prof_p = {x: profile(rel_p, x) for x in range(1, n + 1)}
    prof_q = {x: profile(rel_q, x) for x in range(1, n + 1)}
    if sorted(prof_p.values()) != sorted(prof_q.values()):
        return False
    order = list(range(1, n + 1))
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        x = order[pos]
        for y in range(1, n + 1):
            if y in used or prof_q[y] != prof_p[x]:
                continue
            if any(((z, x) in rel_p) != ((image[z], y) in rel_q)
                   or ((x, z) in rel_p) != ((y, image[z]) in rel_q) for z in order[:pos]):
                continue
            image[x] = y
            used.add(y)
            if extend(pos + 1):
                return True
            used.discard(y)
            del image[x]
        return False

    return extend(0)
