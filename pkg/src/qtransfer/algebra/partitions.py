"""Partitions, compositions, exponent vectors, and tableaux.

Partitions and compositions are plain tuples of positive ints; exponent
vectors ("dominant vectors") are weakly decreasing integer tuples,
negative entries allowed.  Everything here is pure combinatorics with no
coefficient arithmetic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

__all__ = [
    "partitions",
    "compositions",
    "composition_count",
    "conjugate",
    "as_partition",
    "as_composition",
    "is_weakly_decreasing",
    "dominant",
    "orbit",
    "z_order",
    "sn_class_size",
    "ssyt_tableaux",
    "ssyt_weight",
    "render_partition",
    "parse_partition",
]


def partitions(n: int, max_part: int | None = None,
               max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n, parts weakly decreasing, optionally bounded."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rem: int, bound: int, room: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(rem, bound), 0, -1):
            for rest in rec(rem - first, first, room - 1):
                yield (first,) + rest

    yield from rec(n, max_part, max_length)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All 2**(n-1) compositions of n (ordered sequences of positive parts)."""
    if n == 0:
        yield ()
        return
    # cut points: subset of {1, .., n-1}
    for bits in itertools.product((0, 1), repeat=n - 1):
        cuts = [0] + [i + 1 for i, b in enumerate(bits) if b] + [n]
        yield tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def composition_count(lam: Sequence[int]) -> int:
    """Number of compositions whose multiset of parts is the partition lam."""
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    count = factorial(len(lam))
    for m in mult.values():
        count //= factorial(m)
    return count


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def as_partition(seq: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(seq)
    if any(p <= 0 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {lam}")
    return lam


def as_composition(seq: Sequence[int]) -> tuple[int, ...]:
    c = tuple(seq)
    if not c or any(p <= 0 for p in c):
        raise ValueError(f"not a composition: {c}")
    return c


def is_weakly_decreasing(vec: Sequence[int]) -> bool:
    return all(vec[i] >= vec[i + 1] for i in range(len(vec) - 1))


def dominant(vec: Sequence[int]) -> tuple[int, ...]:
    """The weakly decreasing representative of the S_n-orbit of vec."""
    return tuple(sorted(vec, reverse=True))


@lru_cache(maxsize=None)
def orbit(key: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All distinct permutations of an exponent vector.

    Memoized: orbit expansion dominates SymPoly arithmetic, and the same
    dominant keys recur constantly.
    """
    return tuple(set(itertools.permutations(key)))


def z_order(rho: Sequence[int]) -> int:
    """Order of the centralizer in S_n of a permutation of cycle type rho."""
    z = 1
    mult: dict[int, int] = {}
    for p in rho:
        mult[p] = mult.get(p, 0) + 1
    for part, m in mult.items():
        z *= part ** m * factorial(m)
    return z


def sn_class_size(rho: Sequence[int]) -> int:
    """Size of the conjugacy class of cycle type rho in S_{|rho|}."""
    return factorial(sum(rho)) // z_order(rho)


def ssyt_tableaux(shape: Sequence[int], max_entry: int
                  ) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard Young tableaux of the given shape, entries in 1..max_entry.

    Rows weakly increase, columns strictly increase.
    """
    shape = as_partition(shape) if shape else ()
    if not shape:
        yield ()
        return
    if len(shape) > max_entry:
        return  # first column cannot strictly increase

    def fill_row(length: int, above: tuple[int, ...], lo: int
                 ) -> Iterator[tuple[int, ...]]:
        # above[i] bounds entry i from below (strict); lo bounds the first
        # entry so rows are generated in a deterministic order.
        def rec(i: int, prev: int) -> Iterator[tuple[int, ...]]:
            if i == length:
                yield ()
                return
            start = max(prev, above[i] + 1 if i < len(above) else 1)
            for val in range(start, max_entry + 1):
                for rest in rec(i + 1, val):
                    yield (val,) + rest
        yield from rec(0, lo)

    def rec_rows(r: int, above: tuple[int, ...]
                 ) -> Iterator[tuple[tuple[int, ...], ...]]:
        if r == len(shape):
            yield ()
            return
        for row in fill_row(shape[r], above, 1):
            for rest in rec_rows(r + 1, row):
                yield (row,) + rest

    yield from rec_rows(0, ())


def ssyt_weight(tab: Sequence[Sequence[int]], max_entry: int) -> tuple[int, ...]:
    """Weight vector of a tableau: entry i-count at position i-1."""
    w = [0] * max_entry
    for row in tab:
        for x in row:
            w[x - 1] += 1
    return tuple(w)


def render_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    return as_partition(tuple(int(p) for p in text.split(",")))
