"""Integer compositions and set compositions (flags) of [n]."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

Composition = tuple[int, ...]


@dataclass(frozen=True)
class SetComposition:
    """Ordered partition C_1|...|C_k of [n].

    The same value is the flag F_0 = {} < F_1 < ... < F_k = [n] with
    F_i = C_1 u ... u C_i.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: list[int] = []
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if list(b) != sorted(set(b)):
                raise ValueError(f"block {b} is not strictly increasing")
            seen.extend(b)
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError("blocks must partition [n]")

    @classmethod
    def of(cls, *blocks: Sequence[int]) -> SetComposition:
        return cls(tuple(tuple(sorted(b)) for b in blocks))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def prefixes(self) -> list[frozenset[int]]:
        """F_1, ..., F_k."""
        out, acc = [], frozenset()
        for b in self.blocks:
            acc = acc | frozenset(b)
            out.append(acc)
        return out

    def block_index(self) -> list[int]:
        """Entry i is the 1-based index of the block containing vertex i (entry 0 unused)."""
        idx = [0] * (self.n + 1)
        for j, b in enumerate(self.blocks, start=1):
            for v in b:
                idx[v] = j
        return idx

    def __str__(self) -> str:
        return "|".join("".join(map(str, b)) if max(b) < 10 else ",".join(map(str, b)) for b in self.blocks)


def _ordered_partitions(items: tuple[int, ...], k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    if k == 1:
        yield (items,)
        return
    for size in range(1, len(items) - k + 2):
        for first in combinations(items, size):
            rest = tuple(v for v in items if v not in first)
            for tail in _ordered_partitions(rest, k - 1):
                yield (first,) + tail


@lru_cache(maxsize=16)
def _all_set_compositions(n: int) -> tuple[SetComposition, ...]:
    items = tuple(range(1, n + 1))
    out = []
    for k in range(1, n + 1):
        out.extend(sorted(_ordered_partitions(items, k)))
    return tuple(SetComposition(b) for b in out)


def enumerate_set_compositions(n: int) -> Iterator[SetComposition]:
    """Every set composition of [n], ordered by block count then lexicographically."""
    if n <= 0:
        raise ValueError("n must be positive")
    yield from _all_set_compositions(n)


def ordered_bell(n: int) -> int:
    """Number of set compositions of [n] via a(n) = sum_k C(n,k) a(n-k)."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def type_of(F: SetComposition) -> Composition:
    return tuple(len(b) for b in F.blocks)


def canonical_weight(F: SetComposition) -> tuple[int, ...]:
    """Weight vector omega with omega_i = index of the block holding i.

    It lies in the relative interior of the braid-fan cone of F.
    """
    return tuple(F.block_index()[1:])


def flag_from_weight(omega: Sequence[int]) -> SetComposition:
    """Level sets of omega ordered by value; inverse of :func:`canonical_weight`."""
    levels: dict[int, list[int]] = {}
    for i, w in enumerate(omega, start=1):
        levels.setdefault(w, []).append(i)
    return SetComposition(tuple(tuple(levels[w]) for w in sorted(levels)))


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, ordered by length then lexicographically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []
    for k in range(1, n + 1):
        # cut points between 1..n-1
        for cuts in combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            out.append(tuple(bounds[i + 1] - bounds[i] for i in range(k)))
    return sorted(out, key=lambda a: (len(a), a))
