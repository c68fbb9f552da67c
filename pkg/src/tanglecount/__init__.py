"""Exact enumeration of tanglegram variants via cycle-index series.

The package computes, in exact rational arithmetic, the cycle indices of
rooted and unrooted leaf-labeled binary trees and extracts from them the
numbers of unlabeled tanglegrams: ordered and unordered, rooted and
unrooted, plus tangled chains of any length.  A brute-force Burnside
oracle over explicitly enumerated trees cross-checks everything at small
sizes.

>>> from tanglecount import ROOTED_ORDERED, count
>>> [count(ROOTED_ORDERED, n) for n in range(1, 7)]
[1, 1, 2, 13, 114, 1509]
"""

from .cycle_index import (
    CycleIndexSeries,
    DegreeOutOfRange,
    NonZeroConstantTerm,
    count_at_degree,
    h_series,
    inner_plethysm_hn,
    inner_plethysm_pk,
    monomial,
    p1,
    unlabeled_gf,
    zero_series,
)
from .oracle import (
    SizeLimitExceeded,
    UnrootedTree,
    burnside_count,
    enumerate_rooted,
    enumerate_unrooted,
    fix_count,
)
from .partitions import (
    Partition,
    is_binary_partition,
    partitions_of,
    power_type,
    union,
    z,
)
from .species import (
    ROOTED_ORDERED,
    ROOTED_UNORDERED,
    UNROOTED_ORDERED,
    UNROOTED_UNORDERED,
    NonIntegerCoefficient,
    NonIntegerCount,
    TanglegramFamily,
    binary_tree_cycle_index,
    chain,
    chain_unordered,
    count,
    labeled_counts,
    r_closed_form,
    r_coefficient,
    unrooted_tree_cycle_index,
    wedderburn_etherington,
)

__version__ = "0.1.0"

__all__ = [
    "CycleIndexSeries",
    "DegreeOutOfRange",
    "NonIntegerCoefficient",
    "NonIntegerCount",
    "NonZeroConstantTerm",
    "Partition",
    "ROOTED_ORDERED",
    "ROOTED_UNORDERED",
    "SizeLimitExceeded",
    "TanglegramFamily",
    "UNROOTED_ORDERED",
    "UNROOTED_UNORDERED",
    "UnrootedTree",
    "binary_tree_cycle_index",
    "burnside_count",
    "chain",
    "chain_unordered",
    "count",
    "count_at_degree",
    "enumerate_rooted",
    "enumerate_unrooted",
    "fix_count",
    "h_series",
    "inner_plethysm_hn",
    "inner_plethysm_pk",
    "is_binary_partition",
    "labeled_counts",
    "monomial",
    "p1",
    "partitions_of",
    "power_type",
    "r_closed_form",
    "r_coefficient",
    "unlabeled_gf",
    "union",
    "unrooted_tree_cycle_index",
    "wedderburn_etherington",
    "z",
    "zero_series",
]
