from fractions import Fraction

import pytest

from helpers import series
from tanglecount import (
    ROOTED_ORDERED,
    ROOTED_UNORDERED,
    UNROOTED_ORDERED,
    UNROOTED_UNORDERED,
    DegreeOutOfRange,
    NonIntegerCoefficient,
    Partition,
    TanglegramFamily,
    binary_tree_cycle_index,
    chain,
    chain_unordered,
    count,
    h_series,
    is_binary_partition,
    labeled_counts,
    p1,
    partitions_of,
    r_closed_form,
    r_coefficient,
    unrooted_tree_cycle_index,
    wedderburn_etherington,
    z,
)

P = Partition

# printed expansions of the two cycle indices through degree 4
ZR_GOLDEN = {
    1: {(1,): Fraction(1)},
    2: {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)},
    3: {(1, 1, 1): Fraction(1, 2), (2, 1): Fraction(1, 2)},
    4: {
        (1, 1, 1, 1): Fraction(5, 8),
        (2, 2): Fraction(3, 8),
        (2, 1, 1): Fraction(3, 4),
        (4,): Fraction(1, 4),
    },
}

ZU_GOLDEN = {
    2: {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)},
    3: {(2, 1): Fraction(1, 2), (1, 1, 1): Fraction(1, 6), (3,): Fraction(1, 3)},
    4: {
        (2, 1, 1): Fraction(1, 4),
        (1, 1, 1, 1): Fraction(1, 8),
        (2, 2): Fraction(3, 8),
        (4,): Fraction(1, 4),
    },
}


class TestBinaryTreeCycleIndex:
    def test_golden_degrees(self):
        zr = binary_tree_cycle_index(4)
        got = {n: {} for n in range(5)}
        for lam, c in zr.terms.items():
            got[lam.size][lam.parts] = c
        assert got[0] == {}
        for n in range(1, 5):
            assert got[n] == ZR_GOLDEN[n], f"degree {n}"

    def test_fixed_point_identity(self):
        # the defining equation Z = p1 + h2[Z] holds through the truncation
        zr = binary_tree_cycle_index(10)
        assert p1(10) + h_series(2, 10).plethysm(zr) == zr

    def test_supported_on_binary_partitions_only(self):
        zr = binary_tree_cycle_index(12)
        assert all(is_binary_partition(lam) for lam in zr.terms)

    def test_requires_positive_degree(self):
        with pytest.raises(ValueError):
            binary_tree_cycle_index(0)


class TestUnrootedTreeCycleIndex:
    def test_golden_degrees(self):
        zu = unrooted_tree_cycle_index(4)
        got = {n: {} for n in range(5)}
        for lam, c in zu.terms.items():
            got[lam.size][lam.parts] = c
        assert got[0] == {} and got[1] == {}
        for n in range(2, 5):
            assert got[n] == ZU_GOLDEN[n], f"degree {n}"

    def test_requires_degree_two(self):
        with pytest.raises(ValueError):
            unrooted_tree_cycle_index(1)

    def test_coefficients_times_z_are_fix_counts(self):
        # species coefficients times z(lam) are nonnegative integers
        zu = unrooted_tree_cycle_index(10)
        for lam, c in zu.terms.items():
            value = c * z(lam)
            assert value.denominator == 1 and value >= 0, lam


class TestRCoefficient:
    def test_examples(self):
        zr = binary_tree_cycle_index(4)
        assert r_coefficient(P((1, 1, 1)), zr) == 3
        assert r_coefficient(P((2, 2)), zr) == 3
        assert r_coefficient(P((3,)), zr) == 0

    def test_all_ones_gives_double_factorial(self):
        zr = binary_tree_cycle_index(12)
        for n in range(2, 13):
            assert r_coefficient(P((1,) * n), zr) == labeled_counts(n)[0]

    def test_non_integer_raises(self):
        bogus = series(2, ((2,), 1, 3))
        with pytest.raises(NonIntegerCoefficient):
            r_coefficient(P((2,)), bogus)

    def test_beyond_truncation_raises(self):
        with pytest.raises(DegreeOutOfRange):
            r_coefficient(P((8,)), binary_tree_cycle_index(4))


class TestRClosedForm:
    def test_examples(self):
        assert r_closed_form(P((1, 1, 1, 1, 1))) == 105
        assert r_closed_form(P((2, 1, 1))) == 3
        assert r_closed_form(P((3, 1))) == 0

    def test_single_part_is_one(self):
        for k in (1, 2, 4, 8):
            assert r_closed_form(P((k,))) == 1

    def test_empty_partition_is_zero(self):
        assert r_closed_form(P(())) == 0

    def test_matches_solver_through_degree_12(self):
        zr = binary_tree_cycle_index(12)
        for n in range(0, 13):
            for lam in partitions_of(n):
                assert r_closed_form(lam) == r_coefficient(lam, zr), lam

    def test_zero_exactly_on_non_binary_partitions(self):
        zr = binary_tree_cycle_index(10)
        for n in range(1, 11):
            for lam in partitions_of(n):
                if not is_binary_partition(lam):
                    assert r_coefficient(lam, zr) == 0


class TestTanglegramFamily:
    def test_chain_requires_k(self):
        with pytest.raises(ValueError):
            TanglegramFamily("chain")
        with pytest.raises(ValueError):
            TanglegramFamily("chain-unordered", 0)

    def test_plain_families_reject_k(self):
        with pytest.raises(ValueError):
            TanglegramFamily("rooted-ordered", 2)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            TanglegramFamily("rootled")

    def test_labels(self):
        assert ROOTED_ORDERED.label == "rooted-ordered"
        assert chain(3).label == "chain(k=3)"

    def test_min_n(self):
        assert ROOTED_ORDERED.min_n == 1
        assert UNROOTED_ORDERED.min_n == 2


class TestCount:
    def test_spec_examples(self):
        assert count(ROOTED_UNORDERED, 4) == 10
        assert count(UNROOTED_ORDERED, 6) == 31
        assert count(UNROOTED_UNORDERED, 6) == 22
        assert count(ROOTED_ORDERED, 4) == 13
        assert count(chain(3), 3) == 5

    def test_ordered_rooted_dual_route(self):
        # direct r_lam sum against the Kronecker-square route
        zr = binary_tree_cycle_index(8)
        pair = zr.kronecker(zr)
        for n in range(1, 9):
            assert count(ROOTED_ORDERED, n, 8) == pair.count_at_degree(n)

    def test_chain_one_is_unlabeled_trees(self):
        wet = wedderburn_etherington(10)
        for n in range(1, 11):
            assert count(chain(1), n, 10) == wet[n]

    def test_chain_two_matches_pairs(self):
        for n in range(1, 9):
            assert count(chain(2), n, 8) == count(ROOTED_ORDERED, n, 8)
            assert count(chain_unordered(2), n, 8) == count(ROOTED_UNORDERED, n, 8)

    def test_involution_bounds(self):
        for n in range(1, 13):
            ordered = count(ROOTED_ORDERED, n, 12)
            unordered = count(ROOTED_UNORDERED, n, 12)
            assert ordered >= unordered >= Fraction(ordered, 2)
        for n in range(2, 13):
            ordered = count(UNROOTED_ORDERED, n, 12)
            unordered = count(UNROOTED_UNORDERED, n, 12)
            assert ordered >= unordered >= Fraction(ordered, 2)

    def test_counts_positive(self):
        for fam in (ROOTED_ORDERED, ROOTED_UNORDERED, UNROOTED_ORDERED,
                    UNROOTED_UNORDERED, chain(4), chain_unordered(4)):
            for n in range(fam.min_n, 10):
                assert count(fam, n, 9) >= 1

    def test_unrooted_below_two_rejected(self):
        with pytest.raises(ValueError):
            count(UNROOTED_ORDERED, 1, 5)

    def test_beyond_truncation_rejected(self):
        with pytest.raises(DegreeOutOfRange):
            count(ROOTED_ORDERED, 6, 5)


class TestWedderburnEtherington:
    def test_first_values(self):
        assert wedderburn_etherington(6) == [0, 1, 1, 1, 2, 3, 6]

    def test_single_cherry(self):
        assert wedderburn_etherington(2)[2] == 1

    def test_matches_unlabeled_gf(self):
        gf = binary_tree_cycle_index(20).unlabeled_gf()
        assert wedderburn_etherington(20) == gf


class TestLabeledCounts:
    def test_examples(self):
        assert labeled_counts(1) == (1, 1)
        assert labeled_counts(3) == (3, 9)
        assert labeled_counts(5) == (105, 11025)

    def test_double_factorial_recurrence(self):
        for n in range(2, 12):
            assert labeled_counts(n)[0] == (2 * n - 3) * labeled_counts(n - 1)[0]
