"""How much of the Verma module is cut away in the irreducible quotient."""

from __future__ import annotations

from qpchar.combinat import HighestWeight
from qpchar.verify import andrews_section8_check, complement_check, complement_dimensions

for l in (1, 2, 3):
    w = HighestWeight(l + 1, l)
    dims = complement_dimensions(w, 12)
    print(w, dims.to_text())
    print("   ", complement_check(w, 60).to_text())

# the smallest nonzero graded pieces sit at degrees l+1 and l+2
print()
for l in (1, 2, 3, 4):
    print(andrews_section8_check(l, 100).to_text())
