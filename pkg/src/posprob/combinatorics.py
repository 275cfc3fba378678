"""Partitions and compositions: the labels that index every basis.

Partitions are stored weakly decreasing and compositions in their given part
order. Both are tuple subclasses, so Python's tuple comparison supplies the
lexicographic order (a missing part compares smaller than any positive part).
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable


class Composition(tuple):
    """An ordered tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers, got {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


class Partition(Composition):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing, got {tuple(self)}")
        return self


def _partitions_desc(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in ascending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    # the generator emits descending lex order
    return [Partition(p) for p in reversed(list(_partitions_desc(n, n)))]


def sort_to_partition(alpha: Iterable[int]) -> Partition:
    return Partition(sorted(alpha, reverse=True))


def composition_key(alpha: Composition) -> tuple:
    """Sort key realising the total order on compositions of a fixed size.

    Compare the underlying partitions lexicographically, then break ties by
    comparing the compositions themselves lexicographically.
    """
    return (tuple(sort_to_partition(alpha)), tuple(alpha))


def composition_precedes(beta: Composition, alpha: Composition) -> bool:
    """True iff ``beta`` comes strictly before ``alpha`` in the composition order."""
    return composition_key(beta) < composition_key(alpha)


def set_of(alpha: Iterable[int]) -> frozenset[int]:
    """Partial sums of all but the last part, as a subset of {1, ..., n-1}."""
    alpha = tuple(alpha)
    out, total = set(), 0
    for part in alpha[:-1]:
        total += part
        out.add(total)
    return frozenset(out)


def comp_of(subset: Iterable[int], n: int) -> Composition:
    """Inverse of :func:`set_of` for compositions of ``n``."""
    points = sorted(subset)
    if points and (points[0] < 1 or points[-1] > n - 1):
        raise ValueError(f"subset {points} is not contained in [1, {n - 1}]")
    if n == 0:
        return Composition(())
    bounds = [0] + points + [n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n``, ascending in the composition order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [Composition(())]
    comps = [
        comp_of(subset, n)
        for k in range(n)
        for subset in combinations(range(1, n), k)
    ]
    return sorted(comps, key=composition_key)


def transpose(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition(())
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def properly_refines(beta: Iterable[int], alpha: Iterable[int]) -> bool:
    """True iff ``alpha`` is obtained by merging adjacent parts of ``beta`` at least once."""
    beta, alpha = tuple(beta), tuple(alpha)
    if sum(beta) != sum(alpha):
        raise ValueError("compositions must have the same size")
    return set_of(alpha) < set_of(beta)


def display(parts: Iterable[int]) -> str:
    """Run-length display form, e.g. (2,1,1) -> (2,1^2)."""
    parts = tuple(parts)
    chunks, i = [], 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        chunks.append(str(parts[i]) if run == 1 else f"{parts[i]}^{run}")
        i = j
    return "(" + ",".join(chunks) + ")"
