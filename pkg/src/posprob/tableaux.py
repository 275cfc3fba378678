"""Counting semistandard and standard tableaux and (0,1)-matrices.

Every transition coefficient used by the probability engine is computed
here. Counts are exact Python integers. Per-shape results are memoised; the
caches are pure functions of their arguments, so they behave as if absent.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .combinatorics import (
    Composition,
    Partition,
    comp_of,
    compositions_of,
    partitions_of,
)

Grid = tuple[tuple[int, ...], ...]


def _check_same_size(a: Sequence[int], b: Sequence[int]) -> None:
    if sum(a) != sum(b):
        raise ValueError(f"size mismatch: |{tuple(a)}| = {sum(a)} but |{tuple(b)}| = {sum(b)}")


def content_of(rows: Iterable[Iterable[int]]) -> tuple[int, ...]:
    """Content (c_1, ..., c_max) of a filling; empty for the empty filling."""
    counts = Counter(v for row in rows for v in row)
    if not counts:
        return ()
    return tuple(counts.get(v, 0) for v in range(1, max(counts) + 1))


def is_ssyt(rows: Sequence[Sequence[int]]) -> bool:
    shape = [len(r) for r in rows]
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or 0 in shape:
        return False
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v < 1:
                return False
            if c and v < row[c - 1]:
                return False
            if r and v <= rows[r - 1][c]:
                return False
    return True


def is_ssct(rows: Sequence[Sequence[int]]) -> bool:
    """Semistandard composition tableau test.

    Rows weakly decrease, the first column strictly increases downward, and for
    rows i above j: whenever the entry of row j in column m is at most the
    entry of row i in column m-1, row i must reach column m with a strictly
    larger entry there.
    """
    if any(len(row) == 0 for row in rows):
        return False
    for j, row in enumerate(rows):
        for m, v in enumerate(row):
            if not _ssct_ok(rows, j, m, v):
                return False
    return True


def _ssct_ok(rows: Sequence[Sequence[int]], j: int, m: int, v: int) -> bool:
    # checks every constraint whose lowest/rightmost box is (j, m)
    if v < 1:
        return False
    if m and v > rows[j][m - 1]:
        return False
    if m == 0:
        return j == 0 or v > rows[j - 1][0]
    for i in range(j):
        upper = rows[i]
        if m - 1 < len(upper) and v <= upper[m - 1]:
            if m >= len(upper) or not v < upper[m]:
                return False
    return True


# -- Kostka numbers -----------------------------------------------------------

def _horizontal_strips(lam: tuple[int, ...], k: int):
    """Shapes nu inside lam with lam/nu a horizontal strip of size k."""
    length = len(lam)

    def rec(i: int, left: int, acc: tuple[int, ...]):
        if i == length:
            if left == 0:
                yield acc
            return
        floor = lam[i + 1] if i + 1 < length else 0
        for take in range(min(left, lam[i] - floor), -1, -1):
            yield from rec(i + 1, left - take, acc + (lam[i] - take,))

    for nu in rec(0, k, ()):
        yield tuple(p for p in nu if p)


@lru_cache(maxsize=None)
def _ssyt_count(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return int(not shape)
    *head, last = content
    return sum(_ssyt_count(nu, tuple(head)) for nu in _horizontal_strips(shape, last))


def ssyt_count(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of SSYT of partition ``shape`` whose content is the sequence ``content``.

    Zero entries in ``content`` are allowed (the value is simply absent).
    """
    _check_same_size(shape, content)
    return _ssyt_count(tuple(shape), tuple(content))


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Kostka number K_{lam, mu}."""
    lam, mu = Partition(lam), Partition(mu)
    _check_same_size(lam, mu)
    return _ssyt_count(tuple(lam), tuple(mu))


def kostka_row_sum(lam: Sequence[int]) -> int:
    """SSYT of shape ``lam`` with partition content."""
    lam = Partition(lam)
    return sum(kostka(lam, mu) for mu in partitions_of(lam.n))


def kostka_col_sum(lam: Sequence[int]) -> int:
    """SSYT of any shape with content ``lam``."""
    lam = Partition(lam)
    return sum(kostka(mu, lam) for mu in partitions_of(lam.n))


def kostka_matrix(n: int) -> list[list[int]]:
    """Square Kostka matrix, rows and columns in ascending lex order."""
    parts = partitions_of(n)
    return [[kostka(lam, mu) for mu in parts] for lam in parts]


# -- (0,1)-matrices -----------------------------------------------------------

@lru_cache(maxsize=None)
def _zero_one(rows: tuple[int, ...], caps: tuple[int, ...]) -> int:
    if not rows:
        return int(not any(caps))
    need, rest = rows[0], rows[1:]
    if sum(caps) != sum(rows):
        return 0
    by_value = sorted(Counter(c for c in caps if c).items())
    zeros = caps.count(0)
    total = 0

    def rec(idx: int, left: int, ways: int, new_caps: list[int]) -> None:
        nonlocal total
        if idx == len(by_value):
            if left == 0:
                key = tuple(sorted(new_caps + [0] * zeros, reverse=True))
                total += ways * _zero_one(rest, key)
            return
        value, count = by_value[idx]
        for take in range(min(count, left) + 1):
            rec(
                idx + 1,
                left - take,
                ways * comb(count, take),
                new_caps + [value - 1] * take + [value] * (count - take),
            )

    rec(0, need, 1, [])
    return total


def zero_one_count(row_sums: Sequence[int], col_sums: Sequence[int]) -> int:
    """(0,1)-matrices with the given row sums and column sums.

    The matrix has exactly ``len(row_sums)`` rows and ``len(col_sums)`` columns.
    """
    _check_same_size(row_sums, col_sums)
    return _zero_one(tuple(row_sums), tuple(sorted(col_sums, reverse=True)))


def zero_one_row_sum(lam: Sequence[int]) -> int:
    """(0,1)-matrices with row sums ``lam`` and column sums any partition."""
    lam = Partition(lam)
    return sum(zero_one_count(lam, mu) for mu in partitions_of(lam.n))


# -- composition tableaux -----------------------------------------------------

def iter_ssct(shape: Sequence[int], content: Sequence[int] | None = None, max_value: int | None = None):
    """Yield every SSCT of composition ``shape`` as a tuple of row tuples.

    With ``content`` given, exactly that multiset of entries is used;
    otherwise entries range over 1..``max_value`` (default: the size).
    Boxes are filled in row-major order and partial fillings are pruned.
    """
    shape = tuple(Composition(shape))
    n = sum(shape)
    if content is not None:
        _check_same_size(shape, content)
        remaining = [0] + list(content)
        top = len(content)
    else:
        remaining = None
        top = n if max_value is None else max_value
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    rows: list[list[int]] = [[] for _ in shape]

    def rec(pos: int):
        if pos == len(cells):
            yield tuple(tuple(row) for row in rows)
            return
        r, c = cells[pos]
        hi = rows[r][c - 1] if c else top
        for v in range(1, hi + 1):
            if remaining is not None and not remaining[v]:
                continue
            if not _ssct_ok(rows, r, c, v):
                continue
            rows[r].append(v)
            if remaining is not None:
                remaining[v] -= 1
            yield from rec(pos + 1)
            rows[r].pop()
            if remaining is not None:
                remaining[v] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _ssct_contents(shape: tuple[int, ...]) -> Counter:
    """Counter of composition contents over all SSCT of ``shape``.

    Entries are drawn from 1..n; fillings whose used values leave a gap are
    pruned as soon as the gap can no longer be closed.
    """
    n = sum(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    rows: list[list[int]] = [[] for _ in shape]
    used = [0] * (n + 2)
    out: Counter = Counter()

    def rec(pos: int, distinct: int, largest: int) -> None:
        if largest - distinct > len(cells) - pos:
            return
        if pos == len(cells):
            if distinct == largest:
                out[tuple(used[1:largest + 1])] += 1
            return
        r, c = cells[pos]
        hi = rows[r][c - 1] if c else n
        for v in range(1, hi + 1):
            if not _ssct_ok(rows, r, c, v):
                continue
            rows[r].append(v)
            used[v] += 1
            rec(pos + 1, distinct + (used[v] == 1), max(largest, v))
            used[v] -= 1
            rows[r].pop()

    rec(0, 0, 0)
    return out


def ssct_count(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """K^c_{alpha, beta}: SSCT of shape ``alpha`` with content ``beta``."""
    alpha, beta = Composition(alpha), Composition(beta)
    _check_same_size(alpha, beta)
    return _ssct_contents(tuple(alpha)).get(tuple(beta), 0)


def ssct_row_sum(alpha: Sequence[int]) -> int:
    """SSCT of shape ``alpha`` with composition content."""
    alpha = Composition(alpha)
    return sum(_ssct_contents(tuple(alpha)).values())


def descent_set(rows: Sequence[Sequence[int]]) -> frozenset[int]:
    """Entries i of a standard filling such that i+1 sits in a weakly later column."""
    column = {v: c for row in rows for c, v in enumerate(row)}
    return frozenset(i for i in range(1, len(column)) if column[i + 1] >= column[i])


@lru_cache(maxsize=None)
def _sct_descents(shape: tuple[int, ...]) -> Counter:
    n = sum(shape)
    return Counter(
        tuple(comp_of(descent_set(t), n)) for t in iter_ssct(shape, content=(1,) * n)
    )


def sct_count(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """d_{alpha, beta}: SCT of shape ``alpha`` with descent composition ``beta``."""
    alpha, beta = Composition(alpha), Composition(beta)
    _check_same_size(alpha, beta)
    return _sct_descents(tuple(alpha)).get(tuple(beta), 0)


def sct_total(alpha: Sequence[int]) -> int:
    alpha = Composition(alpha)
    return sum(_sct_descents(tuple(alpha)).values())


def is_single_sct_shape(alpha: Sequence[int]) -> bool:
    """Shapes admitting exactly one SCT.

    These are (m, 1^e1, 2, 1^e2, ..., 2, 1^ek) with m >= 0 (m = 0 meaning
    absent), every e_i >= 1 except the last which may be 0.
    """
    alpha = tuple(Composition(alpha))

    def tail_ok(seq: tuple[int, ...]) -> bool:
        # 1s and 2s only, every 2 immediately preceded by a 1
        return all(
            p == 1 or (p == 2 and i > 0 and seq[i - 1] == 1)
            for i, p in enumerate(seq)
        )

    return tail_ok(alpha) or tail_ok(alpha[1:])


def clear_caches() -> None:
    """Drop memoised counts (used to time cold runs)."""
    for fn in (_ssyt_count, _zero_one, _ssct_contents, _sct_descents):
        fn.cache_clear()


# -- witnesses for the ">= 2" lower bounds -------------------------------------

def kostka_witnesses(lam: Sequence[int]) -> tuple[Grid, Grid]:
    """Two SSYT of shape ``lam`` with partition content, distinct unless lam = (1^n).

    The first is filled 1..n in reading order, the second has row i filled with i.
    """
    lam = Partition(lam)
    standard, start = [], 1
    for part in lam:
        standard.append(tuple(range(start, start + part)))
        start += part
    by_row = tuple((i + 1,) * part for i, part in enumerate(lam))
    return tuple(standard), by_row


def col_sum_witnesses(lam: Sequence[int]) -> tuple[Grid, Grid]:
    """Two SSYT with content ``lam`` of different shapes, for lam != (n).

    The second moves the last box of the bottom row to the end of the top row.
    """
    lam = Partition(lam)
    first = tuple((i + 1,) * part for i, part in enumerate(lam))
    if len(lam) < 2:
        return first, first
    k = len(lam)
    rows = [list(r) for r in first]
    rows[0].append(rows[-1].pop())
    if not rows[-1]:
        rows.pop()
    assert rows[0][-1] == k
    return first, tuple(tuple(r) for r in rows)


def zero_one_witnesses(lam: Sequence[int]) -> tuple[Grid, Grid]:
    """Two (0,1)-matrices with row sums ``lam`` and all column sums 1.

    Block-diagonal placement, then the same with columns lam_1 and lam_1 + 1
    swapped; distinct unless lam = (n).
    """
    lam = Partition(lam)
    n = lam.n
    first, col = [], 0
    for part in lam:
        first.append(tuple(int(col <= c < col + part) for c in range(n)))
        col += part
    a = lam[0] - 1
    second = []
    for row in first:
        row = list(row)
        if a + 1 < n:
            row[a], row[a + 1] = row[a + 1], row[a]
        second.append(tuple(row))
    return tuple(first), tuple(second)


def ssct_witnesses(alpha: Sequence[int]) -> tuple[Grid, Grid]:
    """Two SSCT of shape ``alpha`` with composition content.

    The first fills rows bottom-up with n, n-1, ... read left to right; the
    second fills row i with i. Distinct unless alpha = (1^n).
    """
    alpha = Composition(alpha)
    rows, top = [], alpha.n
    for part in reversed(alpha):
        rows.append(tuple(range(top, top - part, -1)))
        top -= part
    by_row = tuple((i + 1,) * part for i, part in enumerate(alpha))
    return tuple(reversed(rows)), by_row


def non_single_sct_shapes(n: int) -> list[Composition]:
    """Compositions of ``n`` admitting more than one SCT, by the pattern test."""
    return [alpha for alpha in compositions_of(n) if not is_single_sct_shape(alpha)]


__all__ = [
    "content_of", "is_ssyt", "is_ssct", "iter_ssct", "ssyt_count", "kostka",
    "kostka_row_sum", "kostka_col_sum", "kostka_matrix", "zero_one_count",
    "zero_one_row_sum", "ssct_count", "ssct_row_sum", "descent_set", "sct_count",
    "sct_total", "is_single_sct_shape", "kostka_witnesses", "col_sum_witnesses",
    "zero_one_witnesses", "ssct_witnesses", "non_single_sct_shapes", "clear_caches",
]
