"""Product side against sum side: Rogers-Ramanujan through Bressoud."""

from __future__ import annotations

from qpchar.characters import (
    GRRParams,
    grr_product,
    grr_sum,
    identity_family,
    standard_char_enumerated,
    standard_char_product,
    standard_char_sum,
)
from qpchar.combinat import HighestWeight
from qpchar.verify import compare

N = 100

# Rogers-Ramanujan: partitions into parts 1, 4 mod 5 vs. sum q^(n^2)/(q)_n
rr = GRRParams(2, 1, 2)
print(grr_product(rr, 15).to_text())
print(compare(grr_product(rr, N), grr_sum(rr, N), "rogers-ramanujan").to_text())

# the whole family up to modulus 11
for l in range(2, 6):
    for s in (0, 1):
        for r in range(1, l):
            p = GRRParams(l, s, r)
            print(compare(grr_product(p, N), grr_sum(p, N), f"grr {p}").to_text())

# characters of standard modules, three ways
print()
for k in range(1, 5):
    for k0 in range(k, -1, -1):
        w = HighestWeight(k0, k - k0)
        prod = standard_char_product(w, 40)
        same = prod == standard_char_sum(w, 40) == standard_char_enumerated(w, 40)
        print(f"{str(w):8s} {identity_family(w):10s} agree={same}  {standard_char_product(w, 10).to_text()}")
