#!/usr/bin/env python3
"""Tour of the symmetric-function layer: partitions, the power-sum basis,
and the four products the species calculus needs.

Every coefficient below is an exact Fraction; nothing is floating point.
"""

from fractions import Fraction

from tanglecount import (
    Partition,
    h_series,
    inner_plethysm_hn,
    inner_plethysm_pk,
    monomial,
    p1,
    partitions_of,
    power_type,
    z,
)

print("=== partitions ===")
print("partitions of 5, reverse lexicographic:")
for lam in partitions_of(5):
    print(f"  {lam}   z = {z(lam)}")
print("sum of n!/z over cycle types is n!:",
      sum(120 // z(lam) for lam in partitions_of(5)), "= 5!")

print()
print("=== power types ===")
lam = Partition((6, 4, 1))
for k in (1, 2, 3, 4):
    print(f"  {lam}^{k} = {power_type(lam, k)}")

print()
print("=== series arithmetic ===")
h2 = h_series(2, 4)
print("h_2          :", h2.render())
print("h_2 + h_2    :", (h2 + h2).render())
print("h_2 * h_2    :", (h2 * h2).render())

print()
print("=== plethysm: substitution of series ===")
print("h_2[h_2]     :", h2.plethysm(h2).render())
print("p_2[p_3]     :", monomial(Partition((2,)), 6).plethysm(
    monomial(Partition((3,)), 6)).render())
print("f[p_1] = f   :", h2.plethysm(p1(4)) == h2)

print()
print("=== Kronecker product: diagonal in the p-basis ===")
print("p_2 * p_2    :", monomial(Partition((2,)), 2).kronecker(
    monomial(Partition((2,)), 2)).render())
print("p_11 * p_2   :", monomial(Partition((1, 1)), 2).kronecker(
    monomial(Partition((2,)), 2)).render())
print("h_2 is idempotent:", h_series(2).kronecker(h_series(2)) == h_series(2))

print()
print("=== inner plethysm: multisets of structures ===")
g = h_series(3, 3)
print("p_2{h_3}     :", inner_plethysm_pk(2, g).render())
print("h_2{h_3}     :", inner_plethysm_hn(2, g).render())
print("h_2{g} = (g*g + p_2{g})/2:",
      inner_plethysm_hn(2, g)
      == (g.kronecker(g) + inner_plethysm_pk(2, g)) * Fraction(1, 2))
