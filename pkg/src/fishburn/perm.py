"""Permutations restricted by the bivincular 231 condition, and the map from ascent sequences.

Permutations are tuples of the letters ``1..n`` in one-line notation.
Gaps are numbered ``0..n``: gap ``g`` sits before position ``g``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence

from fishburn import ascent

Permutation = tuple[int, ...]


class InactiveSiteError(ValueError):
    """The gap directly left of the maximum is not an active site."""


def standardize(word: Sequence[int]) -> Permutation:
    if len(set(word)) != len(word):
        raise ValueError("standardization needs distinct letters")
    rank = {v: i for i, v in enumerate(sorted(word), start=1)}
    return tuple(rank[v] for v in word)


def _check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {tuple(p)}")


def in_R(p: Sequence[int]) -> bool:
    """No 231 occurrence whose '2','3' are adjacent in position and '2','1' adjacent in value."""
    n = len(p)
    for i in range(n - 1):
        j = i + 1
        if p[i] > p[j]:
            continue
        for k in range(j + 1, n):
            if p[k] == p[i] - 1:
                return False
    # any occurrence with j = i+1 and p_i = p_k + 1 is automatically a 231
    return True


def in_R_k(p: Sequence[int], k: int) -> bool:
    """No ``k+1`` consecutive letters that descend by exactly one each."""
    if k < 1:
        raise ValueError("k must be positive")
    run = 1
    for a, b in zip(p, p[1:]):
        run = run + 1 if a == b + 1 else 1
        if run > k:
            return False
    return True


def in_class(p: Sequence[int], k: int | None = None) -> bool:
    """Membership in R_n, or in R_n^(k) when ``k`` is given."""
    return in_R(p) and (k is None or in_R_k(p, k))


def in_T(p: Sequence[int]) -> bool:
    return in_class(p, 1)


def adjdes(p: Sequence[int]) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a == b + 1)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for pos, v in enumerate(p, start=1):
        inv[v - 1] = pos
    return tuple(inv)


def insert_max(p: Sequence[int], gap: int) -> Permutation:
    return tuple(p[:gap]) + (len(p) + 1,) + tuple(p[gap:])


def active_sites(p: Sequence[int]) -> list[int]:
    """Gaps where inserting ``n+1`` stays inside R, left to right (label = list index)."""
    _check_perm(p)
    if not in_R(p):
        raise ValueError(f"{tuple(p)} is not in R_n")
    return [g for g in range(len(p) + 1) if in_R(insert_max(p, g))]


def b_label(p: Sequence[int]) -> int:
    if len(p) == 0:
        raise ValueError("b is undefined on the empty permutation")
    sites = active_sites(p)
    gap = list(p).index(len(p))
    if gap not in sites:
        raise InactiveSiteError(f"gap left of {len(p)} in {tuple(p)} is inactive")
    return sites.index(gap)


def upsilon(x: Sequence[int]) -> Permutation:
    """Grow a permutation by inserting each new maximum at the active site labeled ``x_i``."""
    if len(x) == 0 or not ascent.validate(x):
        raise ValueError(f"not a nonempty ascent sequence: {tuple(x)}")
    p: Permutation = (1,)
    for letter in x[1:]:
        sites = active_sites(p)
        if letter >= len(sites):
            raise RuntimeError(f"label {letter} exceeds the {len(sites)} active sites of {p}")
        p = insert_max(p, sites[letter])
    return p


def lambda_(p: Sequence[int]) -> tuple[int, ...]:
    """Inverse of ``upsilon``: peel off the maximum, recording its site label."""
    _check_perm(p)
    if len(p) == 0 or not in_R(p):
        raise ValueError(f"{tuple(p)} is not in R_n")
    letters = []
    word = list(p)
    while len(word) > 1:
        gap = word.index(len(word))
        word.pop(gap)
        letters.append(active_sites(word).index(gap))
    letters.append(0)
    return tuple(reversed(letters))


def enumerate_R(n: int, k: int | None = None) -> Iterator[Permutation]:
    """Filter S_n by R-membership (and the descent-run bound ``k``)."""
    for p in permutations(range(1, n + 1)):
        if in_class(p, k):
            yield p
