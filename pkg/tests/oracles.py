"""Slow, obviously-correct reference counts.

Nothing here imports the counting code under test: every filling is
generated outright and then filtered by a direct transcription of the
defining rules.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations, product


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def all_partitions(n: int) -> list[tuple[int, ...]]:
    """Every weakly decreasing positive sequence summing to n, by brute force."""
    out = []
    for length in range(n + 1):
        for seq in product(range(1, n + 1), repeat=length):
            if sum(seq) == n and all(a >= b for a, b in zip(seq, seq[1:])):
                out.append(seq)
    return out


def all_compositions(n: int) -> list[tuple[int, ...]]:
    out = []
    for length in range(n + 1):
        out += [seq for seq in product(range(1, n + 1), repeat=length) if sum(seq) == n]
    return out


def _grids(shape, values):
    cells = [(r, c) for r, k in enumerate(shape) for c in range(k)]
    for filling in product(values, repeat=len(cells)):
        rows = [[] for _ in shape]
        for (r, _), v in zip(cells, filling):
            rows[r].append(v)
        yield rows


def _content(rows):
    counts = Counter(v for row in rows for v in row)
    return tuple(counts.get(v, 0) for v in range(1, max(counts) + 1)) if counts else ()


def _ssyt(rows):
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if c and row[c - 1] > v:
                return False
            if r and rows[r - 1][c] >= v:
                return False
    return True


def _entry(rows, i, m):
    # 1-based row i, column m; 0 when absent
    if 1 <= i <= len(rows) and 1 <= m <= len(rows[i - 1]):
        return rows[i - 1][m - 1]
    return None


def _ssct(rows):
    for row in rows:
        if any(row[c] < row[c + 1] for c in range(len(row) - 1)):
            return False
    if any(rows[r][0] >= rows[r + 1][0] for r in range(len(rows) - 1)):
        return False
    width = max(len(r) for r in rows)
    for i in range(1, len(rows) + 1):
        for j in range(i + 1, len(rows) + 1):
            for m in range(2, width + 1):
                low, left = _entry(rows, j, m), _entry(rows, i, m - 1)
                if low is None or left is None:
                    continue
                if low <= left:
                    up = _entry(rows, i, m)
                    if up is None or not low < up:
                        return False
    return True


def naive_kostka(shape, content) -> int:
    values = range(1, len(content) + 1)
    return sum(1 for g in _grids(shape, values) if _content(g) == tuple(content) and _ssyt(g))


def naive_ssct(shape, content) -> int:
    values = range(1, len(content) + 1)
    return sum(1 for g in _grids(shape, values) if _content(g) == tuple(content) and _ssct(g))


def naive_sct_descents(shape) -> Counter:
    """Counter of descent compositions over all SCT of ``shape``."""
    n = sum(shape)
    out = Counter()
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for part in shape:
            rows.append(list(perm[k:k + part]))
            k += part
        if not _ssct(rows):
            continue
        col = {v: c for row in rows for c, v in enumerate(row)}
        des = [i for i in range(1, n) if col[i + 1] >= col[i]]
        bounds = [0] + des + [n]
        out[tuple(b - a for a, b in zip(bounds, bounds[1:]))] += 1
    return out


def naive_zero_one(row_sums, col_sums) -> int:
    ncols = len(col_sums)
    choices = [list(combinations(range(ncols), r)) for r in row_sums]
    count = 0
    for pick in product(*choices):
        sums = [0] * ncols
        for cols in pick:
            for c in cols:
                sums[c] += 1
        count += sums == list(col_sums)
    return count
