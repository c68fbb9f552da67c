"""Shared builders for series tests."""

from fractions import Fraction

from tanglecount import CycleIndexSeries, Partition


def series(degree, *terms):
    """Build a series from (parts, numerator, denominator) triples."""
    return CycleIndexSeries(
        {Partition(parts): Fraction(num, den) for parts, num, den in terms}, degree
    )


def random_partition(rng, n):
    parts = []
    remaining = n
    while remaining:
        p = rng.randint(1, remaining)
        parts.append(p)
        remaining -= p
    return Partition(tuple(sorted(parts, reverse=True)))


def random_series(rng, degree, max_terms=6, zero_constant=False):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        n = rng.randint(1 if zero_constant else 0, degree)
        terms[random_partition(rng, n)] = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
    return CycleIndexSeries(terms, degree)
