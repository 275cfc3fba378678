"""Exact probabilities that a B-positive element is A-positive, for pairs of
bases of symmetric and quasisymmetric functions related by a nonnegative
unitriangular change of basis."""
from .combinatorics import (
    Composition,
    Partition,
    comp_of,
    compositions_of,
    partitions_of,
    properly_refines,
    set_of,
    sort_to_partition,
    transpose,
)
from .geometry import (
    MonteCarloReport,
    SliceGeometry,
    membership,
    monte_carlo,
    slice_geometry,
    volume_ratio_by_determinant,
)
from .probability import (
    BudgetExceeded,
    ProbabilityResult,
    decay_table,
    fm_closed_form,
    pair_probability,
    probability,
    schur_monomial_upper_bound,
)
from .tableaux import (
    is_single_sct_shape,
    kostka,
    kostka_col_sum,
    kostka_row_sum,
    sct_count,
    sct_total,
    ssct_count,
    ssct_row_sum,
    zero_one_count,
    zero_one_row_sum,
)
from .transition import BasisPair, TransitionMatrix, TriangularityError, build, coefficient_sums

__version__ = "0.1.0"
