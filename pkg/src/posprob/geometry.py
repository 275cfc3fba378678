"""Geometric and statistical checks of the product formula.

The B-positive slice is the standard simplex on B_0..B_d and the A-positive
slice is the simplex on the normalised vertices A_j / s_j (s_j the j-th
coefficient sum). Volumes are compared by exact determinants in the chart
that drops the B_0 coordinate, and membership of sampled points in the
A-cone is decided by exact integer back-substitution.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .transition import BasisPair, TransitionMatrix, coefficient_sums

FRACTIONAL_BITS = 64
RNG_ALGORITHM = "numpy.random.PCG64 via SeedSequence.spawn"


@dataclass(frozen=True)
class SliceGeometry:
    dimension: int
    v: tuple[tuple[Fraction, ...], ...]
    w: tuple[tuple[Fraction, ...], ...]


def slice_geometry(matrix: TransitionMatrix) -> SliceGeometry:
    """Edge vectors of both slices, in full B-coordinates (length d+1)."""
    size = matrix.dimension + 1
    sums = coefficient_sums(matrix)

    def unit(k):
        return [Fraction(int(i == k)) for i in range(size)]

    v, w = [], []
    for j in range(1, size):
        vj = unit(j)
        vj[0] -= 1
        v.append(tuple(vj))
        wj = [Fraction(a, sums[j]) for a in matrix.rows[j]]
        wj[0] -= 1
        w.append(tuple(wj))
    return SliceGeometry(matrix.dimension, tuple(v), tuple(w))


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with row pivoting."""
    m = [list(map(Fraction, r)) for r in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return det


def volume_ratio_by_determinant(matrix: TransitionMatrix) -> Fraction:
    """vol(A-slice) / vol(B-slice); the 1/d! factors cancel."""
    geom = slice_geometry(matrix)
    if geom.dimension == 0:
        return Fraction(1)
    # both slices lie in sum(b) = const; drop coordinate 0 as the chart
    chart_v = [vec[1:] for vec in geom.v]
    chart_w = [vec[1:] for vec in geom.w]
    return abs(determinant(chart_w)) / abs(determinant(chart_v))


def a_coordinates(matrix: TransitionMatrix, b: Sequence) -> list:
    """Solve b = T^T a by back-substitution (from the last basis element down)."""
    size = matrix.dimension + 1
    if len(b) != size:
        raise ValueError(f"expected {size} coordinates, got {len(b)}")
    rows = matrix.rows
    a = [0] * size
    for i in range(size - 1, -1, -1):
        a[i] = b[i] - sum(rows[j][i] * a[j] for j in range(i + 1, size) if rows[j][i])
    return a


def membership(matrix: TransitionMatrix, b: Sequence) -> bool:
    """True iff the B-positive element sum b_i B_i is A-positive."""
    if any(x < 0 for x in b):
        raise ValueError("b must be nonnegative")
    return all(x >= 0 for x in a_coordinates(matrix, [Fraction(x) for x in b]))


@dataclass(frozen=True)
class MonteCarloReport:
    pair: BasisPair | None
    n: int | None
    sample_count: int
    seed: int
    workers: int
    hits: int
    exact: Fraction | None = None
    rng: str = RNG_ALGORITHM

    @property
    def estimate(self) -> float:
        return self.hits / self.sample_count

    @property
    def standard_error(self) -> float:
        p = self.estimate
        return math.sqrt(p * (1 - p) / self.sample_count)

    def within(self, sigmas: float = 3.0) -> bool:
        if self.exact is None:
            raise ValueError("report carries no exact value")
        return abs(self.estimate - float(self.exact)) <= sigmas * self.standard_error

    def to_json(self) -> dict:
        return {
            "pair": self.pair.value if self.pair else None,
            "n": self.n,
            "samples": self.sample_count,
            "seed": self.seed,
            "workers": self.workers,
            "hits": self.hits,
            "estimate": self.estimate,
            "stderr": self.standard_error,
            "exact": str(self.exact) if self.exact is not None else None,
        }


def _count_hits(rows: tuple[tuple[int, ...], ...], samples: int, seed_seq: np.random.SeedSequence) -> int:
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    size = len(rows)
    draws = rng.standard_exponential((samples, size))
    # dyadic rationals with 64 fractional bits; integer arithmetic keeps the test exact
    scaled = np.ldexp(draws, FRACTIONAL_BITS)
    b = [[int(x) for x in col] for col in scaled.T]
    a = [None] * size
    hit = [True] * samples
    for i in range(size - 1, -1, -1):
        col = list(b[i])
        for j in range(i + 1, size):
            c = rows[j][i]
            if c:
                aj = a[j]
                col = [x - c * y for x, y in zip(col, aj)]
        a[i] = col
        hit = [h and x >= 0 for h, x in zip(hit, col)]
    return sum(hit)


def monte_carlo(
    matrix: TransitionMatrix,
    samples: int = 100_000,
    seed: int = 0,
    workers: int = 1,
    exact: Fraction | None = None,
) -> MonteCarloReport:
    """Estimate the probability by sampling the B-slice uniformly.

    Uniform points come from normalised unit exponentials; since membership is
    invariant under positive scaling the normalisation is skipped. The sample
    budget is split across ``workers`` sub-seeds, so results are reproducible
    for a fixed (seed, workers) pair.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    workers = max(1, int(workers))
    children = np.random.SeedSequence(seed).spawn(workers)
    chunks = [samples // workers + (k < samples % workers) for k in range(workers)]
    jobs = [(matrix.rows, c, s) for c, s in zip(chunks, children) if c]
    if workers == 1:
        hits = sum(_count_hits(*job) for job in jobs)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_count_hits, *zip(*jobs)))
    return MonteCarloReport(
        pair=matrix.pair,
        n=matrix.n,
        sample_count=samples,
        seed=seed,
        workers=workers,
        hits=hits,
        exact=exact,
    )
