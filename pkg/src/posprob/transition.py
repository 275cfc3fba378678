"""Unitriangular transition matrices between pairs of bases.

Row j of a matrix holds the expansion A_j = sum_i coeff(j, i) B_i. The row
labels index the A basis and ``basis_labels`` index the B basis; for every
pair except the e-in-m and e-in-s cases the two label lists coincide.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .combinatorics import (
    Composition,
    Partition,
    compositions_of,
    partitions_of,
    properly_refines,
    transpose,
)
from .tableaux import kostka, sct_count, ssct_count, zero_one_count


class TriangularityError(RuntimeError):
    """An assembled matrix is not nonnegative unitriangular in its stored order."""


class BasisPair(enum.Enum):
    S_IN_M = "s/m"
    H_IN_S = "h/s"
    E_IN_S = "e/s"
    E_IN_M = "e/m"
    QS_IN_M = "qs/M"
    QS_IN_F = "qs/F"
    F_IN_M = "F/M"

    @property
    def composition_indexed(self) -> bool:
        return self in (BasisPair.QS_IN_M, BasisPair.QS_IN_F, BasisPair.F_IN_M)

    @classmethod
    def parse(cls, text: str) -> "BasisPair":
        for pair in cls:
            if text in (pair.value, pair.name):
                return pair
        raise ValueError(f"unknown basis pair {text!r}; expected one of {[p.value for p in cls]}")


@dataclass(frozen=True)
class TransitionMatrix:
    labels: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, ...], ...]
    basis_labels: tuple[tuple[int, ...], ...] | None = None
    pair: BasisPair | None = None
    n: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(tuple(l) for l in self.labels))
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        if self.basis_labels is None:
            object.__setattr__(self, "basis_labels", self.labels)
        else:
            object.__setattr__(self, "basis_labels", tuple(tuple(l) for l in self.basis_labels))
        size = len(self.rows)
        if len(self.labels) != size or len(self.basis_labels) != size:
            raise ValueError("label lists must match the number of rows")
        for j, row in enumerate(self.rows):
            if len(row) != size:
                raise ValueError(f"row {j} has length {len(row)}, expected {size}")
        self._check_unitriangular()

    def _check_unitriangular(self) -> None:
        for j, row in enumerate(self.rows):
            for i, a in enumerate(row):
                if a < 0:
                    raise TriangularityError(
                        f"negative coefficient {a} at A={self.labels[j]}, B={self.basis_labels[i]}")
                if i > j and a:
                    raise TriangularityError(
                        f"nonzero coefficient {a} above the diagonal at "
                        f"A={self.labels[j]}, B={self.basis_labels[i]}")
            if row[j] != 1:
                raise TriangularityError(
                    f"diagonal coefficient {row[j]} != 1 at A={self.labels[j]}, B={self.basis_labels[j]}")

    @classmethod
    def identity(cls, size: int) -> "TransitionMatrix":
        rows = [[int(i == j) for i in range(size)] for j in range(size)]
        return cls(labels=[(j,) for j in range(size)], rows=rows)

    @property
    def dimension(self) -> int:
        """d, one less than the number of basis elements."""
        return len(self.rows) - 1

    def coeff(self, j: int, i: int) -> int:
        return self.rows[j][i]

    def to_json(self) -> dict:
        return {
            "pair": self.pair.value if self.pair else None,
            "n": self.n,
            "labels": [list(l) for l in self.labels],
            "basis_labels": [list(l) for l in self.basis_labels],
            "rows": [[str(a) for a in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> "TransitionMatrix":
        if isinstance(obj, str):
            obj = json.loads(obj)
        pair = BasisPair.parse(obj["pair"]) if obj.get("pair") else None
        return cls(
            labels=obj["labels"],
            basis_labels=obj.get("basis_labels"),
            rows=[[int(a) for a in row] for row in obj["rows"]],
            pair=pair,
            n=obj.get("n"),
        )


def _assemble(pair, n, a_labels, b_labels, coeff: Callable) -> TransitionMatrix:
    rows = [[coeff(a, b) for b in b_labels] for a in a_labels]
    return TransitionMatrix(labels=a_labels, basis_labels=b_labels, rows=rows, pair=pair, n=n)


def e_in_m_orders(n: int, reading: str = "transpose-each") -> tuple[list[Partition], list[Partition]]:
    """Row and column orders for expanding e_lambda in monomials.

    A-labels run in ascending reverse lexicographic order, starting at (n).
    Two readings of the B-order are offered: ``"transpose-each"`` transposes
    every A-label in place (so B_0 = m_(1^n) matches A_0 = e_n), while
    ``"sort-transposes"`` sorts the transposed labels in reverse lexicographic
    order. Only the first yields a unitriangular matrix; see ``build``.
    """
    a_labels = list(reversed(partitions_of(n)))
    if reading == "transpose-each":
        b_labels = [transpose(lam) for lam in a_labels]
    elif reading == "sort-transposes":
        b_labels = sorted((transpose(lam) for lam in a_labels), reverse=True)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return a_labels, b_labels


def build(pair: BasisPair | str, n: int) -> TransitionMatrix:
    """Assemble the transition matrix of ``pair`` in degree ``n``.

    Raises TriangularityError if the result is not unitriangular, which would
    indicate an ordering or counting bug.
    """
    if isinstance(pair, str):
        pair = BasisPair.parse(pair)
    if n < 1:
        raise ValueError("n must be at least 1")

    if pair is BasisPair.S_IN_M:
        labels = partitions_of(n)
        return _assemble(pair, n, labels, labels, kostka)
    if pair is BasisPair.H_IN_S:
        labels = list(reversed(partitions_of(n)))
        return _assemble(pair, n, labels, labels, lambda lam, mu: kostka(mu, lam))
    if pair is BasisPair.E_IN_S:
        # omega sends h_lam -> e_lam and s_mu -> s_mu'
        a_labels = list(reversed(partitions_of(n)))
        b_labels = [transpose(mu) for mu in a_labels]
        return _assemble(pair, n, a_labels, b_labels,
                         lambda lam, mu_t: kostka(transpose(mu_t), lam))
    if pair is BasisPair.E_IN_M:
        a_labels, b_labels = e_in_m_orders(n)
        return _assemble(pair, n, a_labels, b_labels, zero_one_count)

    labels = compositions_of(n)
    if pair is BasisPair.QS_IN_M:
        return _assemble(pair, n, labels, labels, ssct_count)
    if pair is BasisPair.QS_IN_F:
        return _assemble(pair, n, labels, labels, sct_count)
    if pair is BasisPair.F_IN_M:
        return _assemble(pair, n, labels, labels,
                         lambda alpha, beta: int(alpha == beta or properly_refines(beta, alpha)))
    raise ValueError(f"unhandled pair {pair}")


def coefficient_sums(matrix: TransitionMatrix) -> list[int]:
    """Row sums sum_{i <= j} a_i^(j), one per A-element."""
    return [sum(row[: j + 1]) for j, row in enumerate(matrix.rows)]


def format_label(label: Sequence[int]) -> str:
    return "(" + ",".join(map(str, label)) + ")"
