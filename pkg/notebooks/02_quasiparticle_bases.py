"""Listing quasi-particle monomials and counting them by charge type."""

from __future__ import annotations

from qpchar.combinat import (
    VERMA,
    HighestWeight,
    enumerate_charge_types,
    min_exponent,
    qp_count_series,
    qp_enumerate,
)

# the monomials of exponent <= 3 for the universal module
for m in qp_enumerate(VERMA, 3):
    print(m.exponent, m)

# a level 3 module has charges at most 3 and tighter initial conditions
w = HighestWeight(2, 1)
print()
for m in qp_enumerate(w, 4):
    print(m.exponent, m)

# the count series agrees with listing, but scales far better
print()
print("listed :", [sum(1 for m in qp_enumerate(w, 12) if m.exponent == n) for n in range(13)])
print("counted:", list(qp_count_series(w, 12).coeffs))

# charge types in the canonical order, with their minimal exponents
print()
for c in enumerate_charge_types(w, 6):
    print(c.charges, min_exponent(c, w))
