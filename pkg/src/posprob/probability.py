"""Exact positivity probabilities from unitriangular transition matrices."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import prod

from .combinatorics import partitions_of
from .transition import BasisPair, TransitionMatrix, build, coefficient_sums

PARTITION_MAX_N = 12
COMPOSITION_MAX_N = 8
MAX_N_ENV = "POSPROB_MAX_N"


class BudgetExceeded(ValueError):
    """Requested degree is above the configured enumeration cap."""


def max_n_for(pair: BasisPair, override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(MAX_N_ENV)
    if env:
        return int(env)
    return COMPOSITION_MAX_N if pair.composition_indexed else PARTITION_MAX_N


def check_budget(pair: BasisPair, n: int, max_n: int | None = None) -> None:
    cap = max_n_for(pair, max_n)
    if n > cap:
        raise BudgetExceeded(f"n={n} exceeds the enumeration cap {cap} for {pair.value}")


def decimal_string(value: Fraction, digits: int = 6) -> str:
    """Decimal approximation to ``digits`` significant figures, safe for tiny values."""
    with localcontext() as ctx:
        ctx.prec = digits + 2
        approx = Decimal(value.numerator) / Decimal(value.denominator)
    return f"{approx:.{digits}g}"


@dataclass(frozen=True)
class ProbabilityResult:
    value: Fraction
    factors: tuple[int, ...]
    pair: BasisPair | None = None
    n: int | None = None
    labels: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not 0 < self.value <= 1:
            raise ValueError(f"probability {self.value} outside (0, 1]")
        if self.value * prod(self.factors) != 1:
            raise ValueError("value does not match the factor product")

    @property
    def fraction(self) -> str:
        return str(self.value)

    @property
    def decimal(self) -> str:
        return decimal_string(self.value)

    def to_json(self) -> dict:
        return {
            "pair": self.pair.value if self.pair else None,
            "n": self.n,
            "numerator": str(self.value.numerator),
            "denominator": str(self.value.denominator),
            "factors": [str(f) for f in self.factors],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ProbabilityResult":
        return cls(
            value=Fraction(int(obj["numerator"]), int(obj["denominator"])),
            factors=tuple(int(f) for f in obj["factors"]),
            pair=BasisPair.parse(obj["pair"]) if obj.get("pair") else None,
            n=obj.get("n"),
        )


def probability(matrix: TransitionMatrix) -> ProbabilityResult:
    """Product of the reciprocal coefficient sums of a unitriangular matrix."""
    factors = tuple(coefficient_sums(matrix))
    return ProbabilityResult(
        value=Fraction(1, prod(factors)),
        factors=factors,
        pair=matrix.pair,
        n=matrix.n,
        labels=matrix.labels,
    )


def pair_probability(pair: BasisPair | str, n: int, max_n: int | None = None) -> ProbabilityResult:
    if isinstance(pair, str):
        pair = BasisPair.parse(pair)
    check_budget(pair, n, max_n)
    return probability(build(pair, n))


def fm_closed_form(n: int) -> Fraction:
    """Probability that a monomial-positive quasisymmetric function of degree n is fundamental-positive.

    Each composition alpha contributes 2^(n-1-|set(alpha)|) refinements, and
    summing the exponents over all subsets of [n-1] gives (n-1) 2^(n-2).
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if n == 1:
        return Fraction(1)
    return Fraction(1, 2 ** ((n - 1) * 2 ** (n - 2)))


def schur_monomial_upper_bound(n: int) -> Fraction:
    """1 / 2^(p(n) - 1), bounding the Schur-in-monomial probability."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(1, 2 ** (len(partitions_of(n)) - 1))


def quasi_schur_monomial_upper_bound(n: int) -> Fraction:
    """1 / 2^(2^(n-1) - 1): every non-(1^n) shape has at least two SSCT."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(1, 2 ** (2 ** (n - 1) - 1))


def decay_table(pair: BasisPair | str, n_max: int, max_n: int | None = None):
    """Rows (n, result) for n = 1..n_max.

    A row above the budget carries the BudgetExceeded instance in place of a
    result; earlier rows are still computed.
    """
    if isinstance(pair, str):
        pair = BasisPair.parse(pair)
    rows = []
    for n in range(1, n_max + 1):
        try:
            rows.append((n, pair_probability(pair, n, max_n)))
        except BudgetExceeded as exc:
            rows.append((n, exc))
    return rows


def is_decaying(values) -> bool:
    """Non-increasing, and strictly decreasing once below 1."""
    values = list(values)
    for prev, cur in zip(values, values[1:]):
        if cur > prev or (prev < 1 and cur == prev):
            return False
    return True
