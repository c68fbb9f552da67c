#!/usr/bin/env python3
"""The six count families side by side.

A tanglegram is a pair of binary trees sharing a leaf set; variants drop
the ordering of the pair, unroot the trees, or lengthen the pair to a
chain of k trees.  All counts are exact integers extracted from the
cycle indices.
"""

from tanglecount import (
    ROOTED_ORDERED,
    ROOTED_UNORDERED,
    UNROOTED_ORDERED,
    UNROOTED_UNORDERED,
    chain,
    chain_unordered,
    count,
    labeled_counts,
)

MAX_N = 12
FAMILIES = [
    ROOTED_ORDERED,
    ROOTED_UNORDERED,
    UNROOTED_ORDERED,
    UNROOTED_UNORDERED,
    chain(3),
    chain_unordered(3),
]

header = f"{'n':>3}  " + "  ".join(f"{fam.label:>24}" for fam in FAMILIES)
print(header)
print("-" * len(header))
for n in range(1, MAX_N + 1):
    cells = []
    for fam in FAMILIES:
        if n < fam.min_n:
            cells.append(f"{'-':>24}")
        else:
            cells.append(f"{count(fam, n, MAX_N):>24}")
    print(f"{n:>3}  " + "  ".join(cells))

print()
print("labeled vs unlabeled, ordered rooted pairs:")
print(f"{'n':>3} {'labeled':>16} {'unlabeled':>16}")
for n in range(1, 11):
    print(f"{n:>3} {labeled_counts(n)[1]:>16} {count(ROOTED_ORDERED, n, 10):>16}")

print()
print("sanity: a chain of length 2 is an ordered tanglegram:")
print("  ", all(count(chain(2), n, 10) == count(ROOTED_ORDERED, n, 10)
                for n in range(1, 11)))
