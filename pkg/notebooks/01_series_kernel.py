"""Exact truncated power series: products, inverses, and a few classics."""

from __future__ import annotations

from qpchar.characters import heisenberg_char, partition_series
from qpchar.qseries import TruncatedSeries, mul, mul_inv_one_minus, mul_one_minus, one

N = 20

# (1 - q) * 1/(1 - q) is 1 again, exactly
s = mul_inv_one_minus(one(N), 1)
print("1/(1-q)        ", s.to_text())
print("(1-q)/(1-q)    ", mul_one_minus(s, 1).to_text())

# partition numbers and partitions into odd parts
p = partition_series(N)
F = heisenberg_char(N)
print("p(n)           ", p.to_text())
print("odd parts      ", F.to_text())

# F times the partition series counts pairs (odd partition, partition)
print("F * P          ", mul(F, p).to_text())

# coefficients are Python ints, so nothing overflows
big = partition_series(1000)
print("p(1000) =", big[1000])

# round trip through JSON
assert TruncatedSeries.from_json(F.to_json()) == F
