"""Cycle indices of rooted and unrooted binary-tree species, and exact
counts for the six tanglegram families built from them.

The rooted series solves Z = p_1 + h_2[Z] (a binary tree is a leaf or an
unordered pair of binary trees).  The unrooted series comes from the
dissymmetry decomposition Z_U = h_3[Z] + p_1 Z + Z - Z^2 - p_1.  Counts
are extracted per family:

  rooted ordered       sum over lam |- n of r_lam^2 / z_lam
  tangled chain (k)    sum over lam |- n of r_lam^k / z_lam
  rooted unordered     h_2{Z} evaluated at p_lam = 1, degree n
  chain unordered (k)  h_k{Z} likewise
  unrooted ordered     Z_U Kronecker Z_U likewise
  unrooted unordered   h_2{Z_U} likewise

where r_lam is the number of labeled trees fixed by a permutation of
cycle type lam (only binary partitions contribute).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cycle_index import (
    CycleIndexSeries,
    DegreeOutOfRange,
    h_series,
    inner_plethysm_hn,
    p1,
)
from .partitions import Partition, is_binary_partition, partitions_of, z


class NonIntegerCoefficient(ArithmeticError):
    """A coefficient that must be a nonnegative integer is not; signals an
    upstream bug, never expected on valid inputs."""


class NonIntegerCount(ArithmeticError):
    """A count that must be a nonnegative integer is not."""


_ROOTED_KINDS = ("rooted-ordered", "rooted-unordered")
_UNROOTED_KINDS = ("unrooted-ordered", "unrooted-unordered")
_CHAIN_KINDS = ("chain", "chain-unordered")


@dataclass(frozen=True)
class TanglegramFamily:
    """One of the counted families; chain kinds carry their length k."""

    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind in _CHAIN_KINDS:
            if self.k is None or self.k < 1:
                raise ValueError(f"{self.kind} requires a chain length k >= 1")
        elif self.kind in _ROOTED_KINDS + _UNROOTED_KINDS:
            if self.k is not None:
                raise ValueError(f"{self.kind} does not take a chain length")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def unrooted(self) -> bool:
        return self.kind in _UNROOTED_KINDS

    @property
    def label(self) -> str:
        if self.k is not None:
            return f"{self.kind}(k={self.k})"
        return self.kind

    @property
    def min_n(self) -> int:
        return 2 if self.unrooted else 1


ROOTED_ORDERED = TanglegramFamily("rooted-ordered")
ROOTED_UNORDERED = TanglegramFamily("rooted-unordered")
UNROOTED_ORDERED = TanglegramFamily("unrooted-ordered")
UNROOTED_UNORDERED = TanglegramFamily("unrooted-unordered")


def chain(k: int) -> TanglegramFamily:
    """Tangled chains of length k (k-tuples of trees on one leaf set)."""
    return TanglegramFamily("chain", k)


def chain_unordered(k: int) -> TanglegramFamily:
    """Multisets of k trees on one leaf set."""
    return TanglegramFamily("chain-unordered", k)


# -- cycle indices --------------------------------------------------------


@lru_cache(maxsize=None)
def binary_tree_cycle_index(N: int) -> CycleIndexSeries:
    """The unique series Z with zero constant term satisfying
    Z = p_1 + h_2[Z] through degree N, by successive substitution.

    Each pass stabilizes one more degree, so the truncation degree grows
    with the pass; this keeps every intermediate product within the part
    of the series that is already exact.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    zr = p1(1)
    for m in range(2, N + 1):
        stable = CycleIndexSeries(zr.terms, m)  # degrees < m already exact
        zr = p1(m) + h_series(2, m).plethysm(stable)
    return zr


@lru_cache(maxsize=None)
def unrooted_tree_cycle_index(N: int) -> CycleIndexSeries:
    """Cycle index of unrooted binary trees (leaves labeled, internal
    vertices of degree 3), from the dissymmetry decomposition
    Z_U = h_3[Z_R] + p_1 Z_R + Z_R - Z_R^2 - p_1.

    The one-vertex tree is excluded, so the degree-0 and degree-1
    components vanish and queries need n >= 2.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    zr = binary_tree_cycle_index(N)
    one = p1(N)
    return h_series(3, N).plethysm(zr) + one * zr + zr - zr * zr - one


def r_coefficient(lam: Partition, Z: CycleIndexSeries) -> int:
    """Number of labeled binary trees fixed by a permutation of cycle type
    lam, read off the series as coefficient(lam) * z(lam)."""
    value = Z.coefficient(lam) * z(lam)
    if value.denominator != 1 or value < 0:
        raise NonIntegerCoefficient(
            f"coefficient {value} at {lam} is not a nonnegative integer"
        )
    return int(value)


def r_closed_form(lam: Partition) -> int:
    """Product formula for the fixed-tree count r_lam: over i = 2..l(lam),
    multiply 2*(lam_i + ... + lam_l) - 1; zero unless every part is a
    power of 2.  The empty partition gets 0 (no tree has zero leaves)."""
    if len(lam) == 0 or not is_binary_partition(lam):
        return 0
    out = 1
    tail = lam.size
    for part in lam.parts[:-1]:
        tail -= part
        out *= 2 * tail - 1
    return out


# -- counts ---------------------------------------------------------------


def _as_int(total: Fraction, what: str) -> int:
    if total.denominator != 1:
        raise NonIntegerCount(f"{what} evaluated to non-integer {total}")
    return int(total)


@lru_cache(maxsize=None)
def _chain_unordered_series(k: int, N: int) -> CycleIndexSeries:
    return inner_plethysm_hn(k, binary_tree_cycle_index(N))


@lru_cache(maxsize=None)
def _unrooted_pair_series(N: int) -> CycleIndexSeries:
    zu = unrooted_tree_cycle_index(N)
    return zu.kronecker(zu)


@lru_cache(maxsize=None)
def _unrooted_unordered_series(N: int) -> CycleIndexSeries:
    return inner_plethysm_hn(2, unrooted_tree_cycle_index(N))


def count(family: TanglegramFamily, n: int, N: int | None = None) -> int:
    """Number of unlabeled structures of the family with n leaves.

    N is the truncation degree of the underlying series (default n); the
    series for a given N are cached, so tables should fix N = max n.
    """
    if n < family.min_n:
        raise ValueError(f"{family.label} requires n >= {family.min_n}, got {n}")
    if N is None:
        N = n
    if n > N:
        raise DegreeOutOfRange(f"n = {n} exceeds truncation degree N = {N}")

    kind = family.kind
    if kind in ("rooted-ordered", "chain"):
        k = 2 if kind == "rooted-ordered" else family.k
        zr = binary_tree_cycle_index(N)
        total = Fraction(0)
        for lam in partitions_of(n):
            r = r_coefficient(lam, zr)
            if r:
                total += Fraction(r**k, z(lam))
        return _as_int(total, family.label)
    if kind == "rooted-unordered":
        series = _chain_unordered_series(2, N)
    elif kind == "chain-unordered":
        series = _chain_unordered_series(family.k, N)
    elif kind == "unrooted-ordered":
        series = _unrooted_pair_series(N)
    else:
        series = _unrooted_unordered_series(N)
    return _as_int(series.count_at_degree(n), family.label)


# -- independent checks ---------------------------------------------------


def wedderburn_etherington(N: int) -> list[int]:
    """Counts of unlabeled rooted binary trees by leaf number, computed
    directly from the functional equation W(x) = x + (W(x)^2 + W(x^2))/2;
    index n of the returned list is the coefficient of x^n, for n <= N.

    Independent of the cycle-index path, so it cross-checks
    unlabeled_gf(binary_tree_cycle_index(N)).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    a = [Fraction(0)] * (N + 1)
    a[1] = Fraction(1)
    for n in range(2, N + 1):
        s = sum((a[i] * a[n - i] for i in range(1, n)), start=Fraction(0))
        if n % 2 == 0:
            s += a[n // 2]
        a[n] = s / 2
    return [_as_int(c, f"tree count at {i}") for i, c in enumerate(a)]


def labeled_counts(n: int) -> tuple[int, int]:
    """(number of labeled binary trees on n leaves, number of labeled
    tanglegrams) = ((2n-3)!!, ((2n-3)!!)^2), with value 1 at n = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    trees = 1
    for j in range(1, n):
        trees *= 2 * j - 1
    return trees, trees * trees
