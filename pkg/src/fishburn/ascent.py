"""Ascent sequences: validation, lexicographic enumeration, statistics, runs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterator, Sequence


def asc(seq: Sequence[int]) -> int:
    """Number of positions j with seq[j] < seq[j+1]."""
    return sum(1 for a, b in zip(seq, seq[1:]) if a < b)


def validate(entries: Sequence[int]) -> bool:
    if len(entries) == 0:
        return True
    if entries[0] != 0:
        return False
    ascents = 0
    for prev, cur in zip(entries, entries[1:]):
        if not 0 <= cur <= ascents + 1:
            return False
        if prev < cur:
            ascents += 1
    return True


def max_run(seq: Sequence[int]) -> int:
    return max((len(list(g)) for _, g in groupby(seq)), default=0)


def zeros(seq: Sequence[int]) -> int:
    """Number of equal adjacent pairs."""
    return sum(1 for a, b in zip(seq, seq[1:]) if a == b)


def enumerate_ascent(n: int, max_run: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every ascent sequence of length ``n`` in lexicographic order.

    With ``max_run`` set, only sequences whose runs are at most that long
    are produced.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_run is not None and max_run < 1:
        raise ValueError("max_run must be at least 1")
    if n == 0:
        yield ()
        return
    limit = n if max_run is None else max_run
    prefix = [0]

    def extend(ascents: int, run: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for value in range(ascents + 2):
            new_run = run + 1 if value == last else 1
            if new_run > limit:
                continue
            prefix.append(value)
            yield from extend(ascents + (value > last), new_run)
            prefix.pop()

    yield from extend(0, 1)


@dataclass(frozen=True)
class AscentStats:
    asc: int
    last: int
    zeros: int
    max_run: int
    is_primitive: bool


def stats(seq: Sequence[int]) -> AscentStats:
    if len(seq) == 0:
        raise ValueError("statistic 'last' is undefined on the empty sequence")
    run = max_run(seq)
    return AscentStats(asc(seq), seq[-1], zeros(seq), run, run == 1)


@dataclass(frozen=True)
class RunDecomposition:
    skeleton: tuple[int, ...]
    multiplicities: tuple[int, ...]

    def expand(self) -> tuple[int, ...]:
        return tuple(b for b, m in zip(self.skeleton, self.multiplicities) for _ in range(m))


def run_decomposition(seq: Sequence[int]) -> RunDecomposition:
    """Factor ``seq`` into maximal runs ``b_1^{m_1} ... b_k^{m_k}``."""
    if len(seq) == 0:
        raise ValueError("run decomposition of the empty sequence")
    blocks = [(value, len(list(group))) for value, group in groupby(seq)]
    return RunDecomposition(tuple(b for b, _ in blocks), tuple(m for _, m in blocks))
