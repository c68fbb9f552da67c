import math
import random

import pytest

from tanglecount.partitions import (
    Partition,
    is_binary_partition,
    partitions_of,
    power_type,
    union,
    z,
)

# p(0)..p(20)
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135,
                     176, 231, 297, 385, 490, 627]


def brute_force_partitions(n):
    """Independent oracle: all weakly decreasing positive sequences summing to n."""
    def grow(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in grow(remaining - first, first):
                yield (first,) + rest

    return sorted(grow(n, n))


class TestPartitionType:
    def test_construction_and_fields(self):
        lam = Partition((3, 2, 2, 1))
        assert lam.parts == (3, 2, 2, 1)
        assert lam.size == 8
        assert len(lam) == 4
        assert list(lam) == [3, 2, 2, 1]

    def test_empty_partition(self):
        assert Partition(()).size == 0
        assert Partition(()) == Partition([])

    def test_rejects_increasing_parts(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive_parts(self):
        with pytest.raises(ValueError):
            Partition((2, 0))
        with pytest.raises(ValueError):
            Partition((-1,))

    def test_equality_and_hash(self):
        assert Partition((2, 1)) == Partition([2, 1])
        assert hash(Partition((2, 1))) == hash(Partition((2, 1)))
        assert Partition((2, 1)) != Partition((3,))
        assert {Partition((2, 1)): "x"}[Partition((2, 1))] == "x"

    def test_total_order_is_size_then_lex(self):
        assert Partition((2,)) < Partition((1, 1, 1))  # smaller size first
        assert Partition((1, 1)) < Partition((2,))     # same size: lex on parts
        assert sorted(partitions_of(4)) == [
            Partition(p) for p in [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
        ]

    def test_serialization_format(self):
        assert str(Partition((2, 1, 1))) == "[2,1,1]"
        assert str(Partition(())) == "[]"

    def test_multiplicities(self):
        assert Partition((3, 2, 2, 1)).multiplicities() == {3: 1, 2: 2, 1: 1}


class TestPartitionsOf:
    def test_zero(self):
        assert partitions_of(0) == [Partition(())]

    def test_four_exhaustive(self):
        assert [p.parts for p in partitions_of(4)] == [
            (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)
        ]

    def test_six_against_brute_force(self):
        got = partitions_of(6)
        assert len(got) == 11
        assert sorted(p.parts for p in got) == brute_force_partitions(6)

    def test_reverse_lexicographic_order(self):
        for n in range(1, 10):
            parts = [p.parts for p in partitions_of(n)]
            assert parts == sorted(parts, reverse=True)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_partition_numbers(self, n):
        assert len(partitions_of(n)) == PARTITION_NUMBERS[n]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            partitions_of(-1)


class TestZ:
    def test_examples(self):
        assert z(Partition((1, 1, 1))) == 6
        assert z(Partition((2, 1))) == 2
        assert z(Partition((2, 2))) == 8
        assert z(Partition(())) == 1

    @pytest.mark.parametrize("n", range(0, 13))
    def test_cycle_types_partition_symmetric_group(self, n):
        assert sum(math.factorial(n) // z(lam) for lam in partitions_of(n)) == math.factorial(n)


class TestPowerType:
    def test_examples(self):
        assert power_type(Partition((4,)), 2) == Partition((2, 2))
        assert power_type(Partition((2, 1)), 2) == Partition((1, 1, 1))

    def test_identity(self):
        for n in range(0, 7):
            for lam in partitions_of(n):
                assert power_type(lam, 1) == lam

    def test_composition_law(self):
        for n in range(0, 9):
            for lam in partitions_of(n):
                for a in range(1, 5):
                    for b in range(1, 5):
                        assert power_type(power_type(lam, a), b) == power_type(lam, a * b)

    def test_size_preserved(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(0, 12)
            lam = rng.choice(partitions_of(n))
            k = rng.randint(1, 6)
            assert power_type(lam, k).size == lam.size

    def test_rejects_k_zero(self):
        with pytest.raises(ValueError):
            power_type(Partition((2,)), 0)


class TestIsBinaryPartition:
    def test_examples(self):
        assert is_binary_partition(Partition((4, 2, 1, 1)))
        assert not is_binary_partition(Partition((3, 1)))
        assert is_binary_partition(Partition(()))
        assert is_binary_partition(Partition((16, 8, 8, 1)))
        assert not is_binary_partition(Partition((6,)))


class TestUnion:
    def test_examples(self):
        assert union(Partition((2, 1)), Partition((1,))) == Partition((2, 1, 1))
        assert union(Partition(()), Partition((3,))) == Partition((3,))
        assert union(Partition((2, 2)), Partition((4, 1))) == Partition((4, 2, 2, 1))

    def test_size_adds(self):
        rng = random.Random(11)
        for _ in range(100):
            lam = rng.choice(partitions_of(rng.randint(0, 10)))
            mu = rng.choice(partitions_of(rng.randint(0, 10)))
            assert union(lam, mu).size == lam.size + mu.size
            assert union(lam, mu) == union(mu, lam)
