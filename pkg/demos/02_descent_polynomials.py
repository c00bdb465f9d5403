#!/usr/bin/env python3
"""Descent-set generating polynomials.

Each permutation of [n] contributes the monomial x_{s1-1}*...*x_{sk-1}*y^k
over its descent-value set {s1 < ... < sk}.  Summing over all of S_n gives
a sparse polynomial whose coefficients are exactly the counts, built here
by a derivative recursion rather than by enumerating permutations.
"""

import math

from cdescent import Poly, cdes_formula, descent_set_coefficient, gn, gnk, tau

for n in range(2, 6):
    print(f"g_{n} = {gn(n)}")
print()

g5 = gn(5)
print("Coefficient lookup goes through the descent set itself")
print("(set element s marks variable x_{s-1}):")
for s in [(3, 5), (4, 5), (2, 3, 5)]:
    coeff = descent_set_coefficient(g5, s)
    print(f"  S = {s}: coefficient {coeff} = cdes count {cdes_formula(5, s)}")
print()

print("Setting every variable to 1 recovers the permutation count:")
for n in range(2, 9):
    assert gn(n).evaluate(1, 1) == math.factorial(n)
    print(f"  g_{n}(1, ..., 1) = {gn(n).evaluate(1, 1)} = {n}!")
print()

print("Fixed-size slices, one term per size-k subset of [2, n]:")
for k in range(4):
    print(f"  size {k}: {gnk(4, k)}")
print()

# Each slice term comes from a composition: its ascending prefix sums,
# shifted by one, give the set; the set's gap vector is the *reversed*
# composition, and that is the exponent sequence carrying the weight.
print("Compositions reach their sets in reverse:")
for d in [(1, 2), (2, 1)]:
    print(f"  composition {d} -> set {tau(d)}")
print()

total = Poly()
for k in range(4):
    total = total + gnk(4, k) * Poly.y(k)
print(f"Reassembled from slices: {total}")
print(f"Direct recursion:        {gn(4)}")
assert total == gn(4)
