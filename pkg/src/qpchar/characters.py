"""Principally specialized characters: product sides, sum sides, enumeration.

Three independent routes to the same series:

* product formulas (Gordon-Andrews-Bressoud products, the Weyl-Kac
  principal specialization for standard modules);
* fermionic sums ``sum q^(N_1^2 + ... + linear) / (q)_{n_1} ... ``;
* counting the quasi-particle basis (:mod:`qpchar.combinat`) times ``F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .combinat import (
    VERMA,
    HighestWeight,
    qp_count_series,
    qp_enumerate_counts,
)
from .qseries import (
    TruncatedSeries,
    mul,
    mul_inv_many,
    mul_one_minus,
    one,
    shift,
)

__all__ = [
    "GRRParams",
    "heisenberg_char",
    "partition_series",
    "excluded_residue_product",
    "fermionic_sum",
    "grr_product",
    "grr_sum",
    "verma_char",
    "verma_char_sum",
    "verma_char_enumerated",
    "identity_family",
    "standard_char_product",
    "standard_char_sum",
    "standard_char_enumerated",
]


@dataclass(frozen=True)
class GRRParams:
    """Parameters of the Gordon-Andrews-Bressoud identity, modulus ``2l + s``."""

    l: int
    s: int
    r: int

    def __post_init__(self) -> None:
        if self.l < 2:
            raise ValueError(f"l must be >= 2, got {self.l}")
        if self.s not in (0, 1):
            raise ValueError(f"s must be 0 or 1, got {self.s}")
        # odd moduli also admit r = l (no linear term): the Andrews-Gordon range
        r_max = self.l if self.s == 1 else self.l - 1
        if not 1 <= self.r <= r_max:
            raise ValueError(f"r must lie in 1..{r_max} for s={self.s}, got {self.r}")

    @property
    def modulus(self) -> int:
        return 2 * self.l + self.s

    def __str__(self) -> str:
        return f"l={self.l},s={self.s},r={self.r}"


def heisenberg_char(N: int) -> TruncatedSeries:
    """``F = prod_{n>=1} 1/(1 - q^(2n-1))``."""
    return mul_inv_many(one(N), range(1, N + 1, 2))


def partition_series(N: int) -> TruncatedSeries:
    """``prod_{n>=1} 1/(1 - q^n)``."""
    return mul_inv_many(one(N), range(1, N + 1))


def excluded_residue_product(excluded: set[int], modulus: int, N: int) -> TruncatedSeries:
    """``prod 1/(1 - q^n)`` over ``n >= 1`` whose residue mod ``modulus`` is not excluded."""
    parts = (n for n in range(1, N + 1) if n % modulus not in excluded)
    return mul_inv_many(one(N), parts)


def _nested_tuples(m: int, budget: int) -> Iterator[tuple[int, ...]]:
    """``(N_1 >= ... >= N_m >= 0)`` with ``sum N_j^2 <= budget``."""
    Ns = [0] * m

    # fill N_m first; the j + 1 entries still open are all >= the current value
    def rec(j: int, lower: int, cost: int) -> Iterator[tuple[int, ...]]:
        if j < 0:
            yield tuple(Ns)
            return
        value = lower
        while cost + (j + 1) * value * value <= budget:
            Ns[j] = value
            yield from rec(j - 1, value, cost + value * value)
            value += 1
        Ns[j] = 0

    yield from rec(m - 1, 0, 0)


def fermionic_sum(m: int, linear_from: int, last_step: int, N: int) -> TruncatedSeries:
    """``sum q^(N_1^2+...+N_m^2 + N_i+...+N_m) / (q)_{n_1}...(q)_{n_{m-1}} (q^a;q^a)_{n_m}``.

    ``linear_from`` is ``i`` (pass ``m + 1`` for no linear term) and
    ``last_step`` is ``a``.  A summand can only reach ``q^n`` with ``n <= N``
    if ``sum N_j^2 <= N``, which bounds the enumeration.
    """
    if m < 0:
        raise ValueError(f"number of summation variables must be >= 0, got {m}")
    if last_step not in (1, 2):
        raise ValueError(f"last_step must be 1 or 2, got {last_step}")
    base = one(N)
    acc = [0] * (N + 1)
    for Ns in _nested_tuples(m, N):
        exponent = sum(x * x for x in Ns) + sum(Ns[linear_from - 1 :])
        if exponent > N:
            continue
        ns = [Ns[j] - (Ns[j + 1] if j + 1 < m else 0) for j in range(m)]
        parts: list[int] = []
        for j, nj in enumerate(ns):
            step = last_step if j == m - 1 else 1
            parts.extend(step * a for a in range(1, nj + 1))
        term = shift(mul_inv_many(base, parts), exponent)
        for n, x in enumerate(term.coeffs):
            acc[n] += x
    return TruncatedSeries(N, tuple(acc))


def grr_product(p: GRRParams, N: int) -> TruncatedSeries:
    M = p.modulus
    return excluded_residue_product({0, p.r % M, (-p.r) % M}, M, N)


def grr_sum(p: GRRParams, N: int) -> TruncatedSeries:
    return fermionic_sum(p.l - 1, p.r, 2 - p.s, N)


def verma_char(N: int) -> TruncatedSeries:
    """``F * prod 1/(1 - q^n)``: graded dimensions of a Verma module."""
    return mul(heisenberg_char(N), partition_series(N))


def verma_char_sum(N: int) -> TruncatedSeries:
    """``F * sum q^(N_1^2 + N_2^2 + ...) / (q)_{n_1} (q)_{n_2} ...`` over all finite sequences."""
    # a nonzero N_m forces sum N_j^2 >= m, so N variables suffice
    return mul(heisenberg_char(N), fermionic_sum(N, N + 1, 1, N))


def verma_char_enumerated(N: int, brute: bool = False) -> TruncatedSeries:
    counts = qp_enumerate_counts(VERMA, N) if brute else qp_count_series(VERMA, N)
    return mul(heisenberg_char(N), counts)


def identity_family(w: HighestWeight) -> str:
    """Which identity expresses the vacuum character of ``L(w)``."""
    w.require_standard()
    if w.level % 2:
        return "andrews"
    if w.k0 != w.k1:
        return "bressoud"
    return "bressoud2"


def standard_char_product(w: HighestWeight, N: int) -> TruncatedSeries:
    """Principally specialized character of ``L(k0, k1)`` from the product formula."""
    w.require_standard()
    M = w.level + 2
    a = w.k0 + 1
    F = heisenberg_char(N)
    if w.k0 != w.k1:
        return mul(F, excluded_residue_product({0, a % M, (-a) % M}, M, N))
    prod = excluded_residue_product({0, a % M}, M, N)
    for n in range(a, N + 1, M):
        prod = mul_one_minus(prod, n)
    return mul(F, prod)


def standard_char_sum(w: HighestWeight, N: int) -> TruncatedSeries:
    """``F`` times the Andrews / Bressoud fermionic sum for ``L(k0, k1)``."""
    family = identity_family(w)
    m = w.level // 2
    i = min(w.k0 + 1, w.k1 + 1)
    if family == "andrews":
        vacuum = fermionic_sum(m, i, 1, N)
    elif family == "bressoud":
        vacuum = fermionic_sum(m, i, 2, N)
    else:
        # i = k/2 + 1 exceeds the number of variables: no linear term
        vacuum = fermionic_sum(m, m + 1, 2, N)
    return mul(heisenberg_char(N), vacuum)


def standard_char_enumerated(w: HighestWeight, N: int, brute: bool = False) -> TruncatedSeries:
    """``F`` times the count of quasi-particle basis monomials.

    With ``brute=True`` the count comes from exhaustive backtracking rather
    than the per-charge-type gap formula; only sensible for small ``N``.
    """
    w.require_standard()
    counts = qp_enumerate_counts(w, N) if brute else qp_count_series(w, N)
    return mul(heisenberg_char(N), counts)
