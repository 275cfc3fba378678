"""Exit criteria for the package; one PASS/FAIL line per criterion is printed
in the terminal summary. Run with ``pytest tests/test_acceptance.py``.
"""
import time
from fractions import Fraction

import pytest

from posprob.combinatorics import compositions_of, partitions_of, transpose
from posprob.geometry import monte_carlo, volume_ratio_by_determinant
from posprob.probability import is_decaying, pair_probability, probability, schur_monomial_upper_bound
from posprob.tableaux import (
    clear_caches,
    is_single_sct_shape,
    kostka,
    kostka_col_sum,
    kostka_row_sum,
    non_single_sct_shapes,
    sct_count,
    sct_total,
    ssct_count,
    ssct_row_sum,
    zero_one_count,
    zero_one_row_sum,
)
from posprob.transition import BasisPair, build, coefficient_sums

from oracles import naive_kostka, naive_sct_descents, naive_ssct, naive_zero_one

ALL_PAIRS = list(BasisPair)
PARTITION_PAIRS = [p for p in BasisPair if not p.composition_indexed]


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        clear_caches()
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.1f}s, limit {self.limit}s"


C1 = pytest.mark.criterion(1, "degree-3 probabilities from the worked examples (exact)")


@C1
@pytest.mark.parametrize("pair, expected", [
    ("s/m", Fraction(1, 9)),
    ("h/s", Fraction(1, 8)),
    ("e/s", Fraction(1, 8)),
    ("e/m", Fraction(1, 40)),
    ("qs/M", Fraction(1, 16)),
    ("qs/F", Fraction(1)),
    ("F/M", Fraction(1, 4)),
])
def test_c1_degree_three_values(pair, expected):
    with Timer(1.0):
        value = pair_probability(pair, 3).value
    assert value == expected


@pytest.mark.criterion(2, "degree-3 coefficient sums (exact)")
def test_c2_intermediate_counts():
    lams = [(3,), (2, 1), (1, 1, 1)]
    assert [kostka_row_sum(l) for l in lams] == [3, 3, 1]
    assert [kostka_col_sum(l) for l in lams] == [1, 2, 4]
    assert [zero_one_row_sum(l) for l in lams] == [1, 4, 10]
    comps = list(reversed(compositions_of(3)))
    assert comps == [(3,), (2, 1), (1, 2), (1, 1, 1)]
    assert [ssct_row_sum(a) for a in comps] == [4, 2, 2, 1]
    assert [sct_total(a) for a in comps] == [1, 1, 1, 1]


@pytest.mark.criterion(3, "F/M matrix product equals 1/((n-1) 2^(n-2)) for 2 <= n <= 10")
@pytest.mark.parametrize("n", range(2, 11))
def test_c3_fm_closed_form(n):
    with Timer(10.0):
        value = probability(build(BasisPair.F_IN_M, n)).value
    assert value == Fraction(1, (n - 1) * 2 ** (n - 2))


@pytest.mark.criterion(4, "determinant volume ratio equals the product formula")
def test_c4_geometric_oracle():
    with Timer(30.0):
        cases = [(p, n) for p in ALL_PAIRS for n in range(1, 6)]
        cases += [(p, n) for p in PARTITION_PAIRS for n in range(6, 9)]
        for pair, n in cases:
            m = build(pair, n)
            assert volume_ratio_by_determinant(m) == probability(m).value, (pair, n)


@pytest.mark.criterion(5, "Monte Carlo (1e5 samples) within 3 standard errors at n = 3, 4")
def test_c5_statistical_oracle():
    with Timer(60.0):
        for pair in ALL_PAIRS:
            for n in (3, 4):
                m = build(pair, n)
                exact = probability(m).value
                report = monte_carlo(m, samples=100_000, seed=7, exact=exact)
                if not report.within(3.0):
                    report = monte_carlo(m, samples=100_000, seed=8, exact=exact)
                assert report.within(3.0), (pair, n, report)


@pytest.mark.criterion(6, "counting operations match generate-and-filter oracles for n <= 5")
def test_c6_brute_force():
    with Timer(60.0):
        for n in range(1, 6):
            parts = partitions_of(n)
            for lam in parts:
                assert kostka_row_sum(lam) == sum(naive_kostka(lam, mu) for mu in parts)
                assert kostka_col_sum(lam) == sum(naive_kostka(mu, lam) for mu in parts)
                assert zero_one_row_sum(lam) == sum(naive_zero_one(lam, mu) for mu in parts)
                for mu in parts:
                    assert kostka(lam, mu) == naive_kostka(lam, mu)
                    assert zero_one_count(lam, mu) == naive_zero_one(lam, mu)
            comps = compositions_of(n)
            for alpha in comps:
                descents = naive_sct_descents(alpha)
                assert sct_total(alpha) == sum(descents.values())
                assert ssct_row_sum(alpha) == sum(naive_ssct(alpha, beta) for beta in comps)
                for beta in comps:
                    assert ssct_count(alpha, beta) == naive_ssct(alpha, beta)
                    assert sct_count(alpha, beta) == descents.get(tuple(beta), 0)


@pytest.mark.criterion(7, "finite-n lower bounds, upper bounds, and decay")
def test_c7_bounds_and_decay():
    for n in range(1, 8):
        for lam in partitions_of(n):
            if lam != (1,) * n:
                assert kostka_row_sum(lam) >= 2
            if lam != (n,):
                assert kostka_col_sum(lam) >= 2
                assert zero_one_row_sum(lam) >= 2
        for alpha in compositions_of(n):
            if alpha != (1,) * n:
                assert ssct_row_sum(alpha) >= 2
            assert (sct_total(alpha) == 1) == is_single_sct_shape(alpha)
        assert pair_probability("s/m", n).value <= schur_monomial_upper_bound(n)

    assert set(non_single_sct_shapes(4)) == {(1, 3), (2, 2)}
    for n in range(5, 10):
        assert len(non_single_sct_shapes(n)) >= 2 ** (n - 3)

    for pair in ALL_PAIRS:
        values = [pair_probability(pair, n).value for n in range(2, 8)]
        assert is_decaying(values), pair
        assert values[-1] < 1


@pytest.mark.criterion(8, "unitriangularity, shared Kostka matrix, P(h|s) = P(e|s)")
def test_c8_structure():
    for pair in ALL_PAIRS:
        for n in range(1, 8 if pair.composition_indexed else 7):
            m = build(pair, n)
            for j, row in enumerate(m.rows):
                assert row[j] == 1
                assert all(a == 0 for a in row[j + 1:])
                assert min(row) >= 0
    for n in range(1, 7):
        s = build(BasisPair.S_IN_M, n)
        h = build(BasisPair.H_IN_S, n)
        size = len(s.rows)
        assert h.labels == tuple(reversed(s.labels))
        for j in range(size):
            for i in range(size):
                assert h.rows[j][i] == s.rows[size - 1 - i][size - 1 - j]
        assert pair_probability("h/s", n).value == pair_probability("e/s", n).value
        e = build(BasisPair.E_IN_S, n)
        assert e.basis_labels == tuple(transpose(l) for l in e.labels)
        assert sorted(coefficient_sums(e)) == sorted(coefficient_sums(h))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
