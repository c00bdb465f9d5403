#!/usr/bin/env python3
"""Generalized Genocchi numbers from the polynomial recursion.

The order-k family iterates A_{m+1}(X) = X^k A_m(X+1) - (X-1)^k A_m(X)
from A_0 = 1; evaluating at X = 1 yields the numbers.  They also count
permutations of [k*n] in which position i holds a value >= i exactly when
that value is divisible by k.
"""

from cdescent import brute_genocchi_perm_count, gandhi_poly, genocchi_number


def poly_str(coeffs):
    terms = []
    for i, c in reversed(list(enumerate(coeffs))):
        if c:
            power = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            terms.append(f"{c}{power}" if power else str(c))
    return " + ".join(terms).replace("+ -", "- ")


print("Order-2 polynomials:")
for m in range(5):
    print(f"  A_{m} = {poly_str(gandhi_poly(2, m))}")
print()

print("Order-2 numbers (classical):", [genocchi_number(2, n) for n in range(1, 8)])
print("Order-1 numbers (constant): ", [genocchi_number(1, n) for n in range(1, 8)])
print("Order-3 numbers:            ", [genocchi_number(3, n) for n in range(1, 7)])
print()

print("Permutation interpretation (value >= position iff divisible by k):")
for k, n in [(1, 3), (2, 2), (2, 3), (3, 2)]:
    brute = brute_genocchi_perm_count(k, n)
    print(
        f"  k={k}, permutations of [{k * n}]: {brute}"
        f" = number of order {k} at index {n + 1}"
        f" ({genocchi_number(k, n + 1)})"
    )
