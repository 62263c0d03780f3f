"""Quasi-particle monomials and the partitions that count them.

A module is described either by :data:`VERMA` or by a :class:`HighestWeight`
``(k0, k1)`` (the standard module of that highest weight).  A quasi-particle
monomial ``X^{(p_1)}(j_1) ... X^{(p_s)}(j_s)`` is admissible when

* charges are nondecreasing, capped at ``k // 2`` for standard modules;
* the last degree satisfies ``j_s <= -n(p_s)``;
* at a charge increase ``p_l < p_{l+1}``: ``j_l <= -n(p_l) - 2 p_l (s - l)``;
* within equal charges ``j_l <= j_{l+1} - 2 p_l``;
* for even ``k`` every degree at charge ``k/2`` is ``= k0 (mod 2)``;

where ``n(p) = p`` for Verma modules and ``n(p) = n_lambda(w, p)`` otherwise.
The Heisenberg factor ``B(i_1)...B(i_r)`` with odd ``i <= -1`` is independent
of all this and is counted by ``F = prod (1 - q^(2n-1))^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

from .qseries import TruncatedSeries, mul_inv_many, one, shift, zero

__all__ = [
    "Verma",
    "VERMA",
    "HighestWeight",
    "ModuleSpec",
    "ChargeType",
    "QPMonomial",
    "BasisMonomial",
    "n_lambda",
    "initial_bound",
    "check_conditions",
    "minimal_degrees",
    "min_exponent",
    "min_exponent_closed_form",
    "enumerate_charge_types",
    "gap_steps",
    "qp_count_series",
    "qp_enumerate",
    "qp_enumerate_counts",
    "odd_partitions",
    "basis_enumerate",
    "partitions_with_parts_in",
]


@dataclass(frozen=True)
class Verma:
    """Marker for the Verma module (no charge cap, ``n(p) = p``)."""

    def __str__(self) -> str:
        return "verma"


VERMA = Verma()


@dataclass(frozen=True)
class HighestWeight:
    k0: int
    k1: int

    def __post_init__(self) -> None:
        for name, v in (("k0", self.k0), ("k1", self.k1)):
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def level(self) -> int:
        return self.k0 + self.k1

    @property
    def t(self) -> int:
        return min(self.k0, self.k1)

    @property
    def i(self) -> int:
        return self.t + 1

    @property
    def max_charge(self) -> int:
        return self.level // 2

    def require_standard(self) -> None:
        if self.level < 1:
            raise ValueError(
                f"standard module needs level k0 + k1 >= 1, got ({self.k0}, {self.k1})"
            )

    def __str__(self) -> str:
        return f"({self.k0},{self.k1})"


ModuleSpec = Union[Verma, HighestWeight]


def _charge_cap(spec: ModuleSpec) -> int | None:
    if isinstance(spec, Verma):
        return None
    spec.require_standard()
    return spec.max_charge


def n_lambda(w: HighestWeight, p: int) -> int:
    """Initial-condition offset: ``p`` up to ``t = min(k0, k1)``, ``2p - t`` above."""
    w.require_standard()
    if not isinstance(p, int) or not 1 <= p <= w.max_charge:
        raise ValueError(f"charge {p!r} outside 1..{w.max_charge} for weight {w}")
    return p if p <= w.t else 2 * p - w.t


def initial_bound(spec: ModuleSpec, p: int) -> int:
    """``n(p)``: the rightmost charge-``p`` quasi-particle has degree ``<= -n(p)``."""
    if isinstance(spec, Verma):
        if p < 1:
            raise ValueError(f"charge must be positive, got {p}")
        return p
    return n_lambda(spec, p)


@dataclass(frozen=True, order=False)
class ChargeType:
    """Multiplicities ``n_p`` of each charge ``p = 1, 2, ...``.

    ``multiplicities[p - 1] == n_p``; trailing zeros are stripped so equal
    charge types compare equal.
    """

    multiplicities: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        m = tuple(self.multiplicities)
        if any((not isinstance(x, int)) or x < 0 for x in m):
            raise ValueError(f"multiplicities must be nonnegative integers: {m}")
        while m and m[-1] == 0:
            m = m[:-1]
        object.__setattr__(self, "multiplicities", m)

    @classmethod
    def from_charges(cls, charges: Sequence[int]) -> "ChargeType":
        if any(p < 1 for p in charges):
            raise ValueError(f"charges must be positive: {tuple(charges)}")
        mult = [0] * (max(charges) if charges else 0)
        for p in charges:
            mult[p - 1] += 1
        return cls(tuple(mult))

    def n(self, p: int) -> int:
        return self.multiplicities[p - 1] if 1 <= p <= len(self.multiplicities) else 0

    def N(self, j: int) -> int:
        """Number of quasi-particles of charge ``>= j``."""
        return sum(self.multiplicities[j - 1 :]) if j >= 1 else sum(self.multiplicities)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        """``(N_1, N_2, ..., N_P)``."""
        out = []
        acc = 0
        for x in reversed(self.multiplicities):
            acc += x
            out.append(acc)
        return tuple(reversed(out))

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(p for p, x in enumerate(self.multiplicities, 1) for _ in range(x))

    @property
    def max_charge(self) -> int:
        return len(self.multiplicities)

    @property
    def total_charge(self) -> int:
        return sum(p * x for p, x in enumerate(self.multiplicities, 1))

    @property
    def length(self) -> int:
        return sum(self.multiplicities)

    def order_key(self) -> tuple:
        # b < b' when b carries more total charge, then reverse-lex on charges
        return (-self.total_charge, tuple(reversed(self.charges)))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.charges) + ")"


@dataclass(frozen=True)
class QPMonomial:
    """One basis vector: Heisenberg part plus quasi-particle part.

    ``heisenberg`` holds ``i_1 <= ... <= i_r <= -1`` (odd); ``charges`` and
    ``degrees`` are the charge-type and degree-type of the quasi-particle part.
    """

    heisenberg: tuple[int, ...] = ()
    charges: tuple[int, ...] = ()
    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for name in ("heisenberg", "charges", "degrees"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if len(self.charges) != len(self.degrees):
            raise ValueError("charges and degrees must have the same length")
        if any(p < 1 for p in self.charges):
            raise ValueError(f"charges must be positive: {self.charges}")
        if any(a > b for a, b in zip(self.charges, self.charges[1:])):
            raise ValueError(f"charges must be nondecreasing: {self.charges}")
        if any(a > b for a, b in zip(self.heisenberg, self.heisenberg[1:])):
            raise ValueError(f"Heisenberg indices must be nondecreasing: {self.heisenberg}")

    @property
    def qp_exponent(self) -> int:
        return -sum(self.degrees)

    @property
    def heisenberg_exponent(self) -> int:
        return -sum(self.heisenberg)

    @property
    def exponent(self) -> int:
        return self.qp_exponent + self.heisenberg_exponent

    @property
    def charge_type(self) -> ChargeType:
        return ChargeType.from_charges(self.charges)

    def qp_part(self) -> "QPMonomial":
        return QPMonomial((), self.charges, self.degrees)

    def sort_key(self) -> tuple:
        return (
            self.exponent,
            self.qp_exponent,
            sum(self.charges),
            tuple(reversed(self.charges)),
            tuple(reversed(self.degrees)),
            self.heisenberg,
        )

    def __str__(self) -> str:
        heis = "".join(f"B({i})" for i in self.heisenberg)
        qp = "".join(f"X{p}({j})" for p, j in zip(self.charges, self.degrees))
        text = " ".join(part for part in (heis, qp) if part)
        return text or "1"

    def to_dict(self) -> dict:
        return {
            "heis": list(self.heisenberg),
            "charges": list(self.charges),
            "degrees": list(self.degrees),
        }


BasisMonomial = QPMonomial


def check_conditions(m: QPMonomial, spec: ModuleSpec) -> bool:
    """Whether ``m`` belongs to the quasi-particle basis of the given module."""
    if any(i > -1 or i % 2 == 0 for i in m.heisenberg):
        return False
    charges, degrees = m.charges, m.degrees
    s = len(charges)
    if s == 0:
        return True
    cap = _charge_cap(spec)
    if cap is not None and charges[-1] > cap:
        return False
    if degrees[-1] > -initial_bound(spec, charges[-1]):
        return False
    for l in range(s - 1):  # 0-based index into the factors
        p, j = charges[l], degrees[l]
        if p < charges[l + 1]:
            if j > -initial_bound(spec, p) - 2 * p * (s - 1 - l):
                return False
        elif j > degrees[l + 1] - 2 * p:
            return False
    if isinstance(spec, HighestWeight) and spec.level % 2 == 0:
        top = spec.level // 2
        for p, j in zip(charges, degrees):
            if p == top and (j - spec.k0) % 2:
                return False
    return True


def _check_cap(c: ChargeType, spec: ModuleSpec) -> None:
    cap = _charge_cap(spec)
    if cap is not None and c.max_charge > cap:
        raise ValueError(f"charge type {c} exceeds the charge cap {cap} of {spec}")


def minimal_degrees(c: ChargeType, spec: ModuleSpec) -> tuple[int, ...]:
    """Componentwise largest admissible degree-type for charge type ``c``.

    Built right to left: the last degree sits at its initial bound, equal
    charges step down by ``2p``, and each charge boundary restarts at
    ``-n(p_l) - 2 p_l (s - l)``.
    """
    _check_cap(c, spec)
    charges = c.charges
    s = len(charges)
    if s == 0:
        return ()
    degrees = [0] * s
    degrees[-1] = -initial_bound(spec, charges[-1])
    for l in range(s - 2, -1, -1):
        p = charges[l]
        if p == charges[l + 1]:
            degrees[l] = degrees[l + 1] - 2 * p
        else:
            degrees[l] = -initial_bound(spec, p) - 2 * p * (s - 1 - l)
    return tuple(degrees)


def min_exponent(c: ChargeType, spec: ModuleSpec) -> int:
    """Smallest exponent of a quasi-particle monomial of charge type ``c``."""
    return -sum(minimal_degrees(c, spec))


def min_exponent_closed_form(c: ChargeType, spec: ModuleSpec) -> int:
    """``sum_j N_j^2`` plus ``N_i + ... + N_{[k/2]}`` for standard modules."""
    _check_cap(c, spec)
    Ns = c.partial_sums
    value = sum(x * x for x in Ns)
    if isinstance(spec, HighestWeight):
        value += sum(Ns[spec.i - 1 :])
    return value


def _charge_vectors(max_p: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors ``(n_1..n_maxp)`` with ``sum_j N_j^2 <= budget``."""
    mult = [0] * max_p

    def rec(p: int, Nabove: int, cost: int) -> Iterator[tuple[int, ...]]:
        if p == 0:
            yield tuple(mult)
            return
        n = 0
        while True:
            Np = Nabove + n
            # N_1..N_{p-1} are all >= Np
            if cost + Np * Np * p > budget:
                break
            mult[p - 1] = n
            yield from rec(p - 1, Np, cost + Np * Np)
            n += 1
        mult[p - 1] = 0

    yield from rec(max_p, 0, 0)


def enumerate_charge_types(spec: ModuleSpec, budget: int) -> list[ChargeType]:
    """Every charge type whose minimal exponent is at most ``budget``.

    Returned in the canonical order: larger total charge first, then
    reverse-lexicographic on the charge tuple.
    """
    if budget < 0:
        raise ValueError(f"budget must be nonnegative, got {budget}")
    cap = _charge_cap(spec)
    max_p = budget if cap is None else min(cap, budget)
    found = []
    for mult in _charge_vectors(max_p, budget):
        c = ChargeType(mult)
        if min_exponent(c, spec) <= budget:
            found.append(c)
    found.sort(key=ChargeType.order_key)
    return found


def gap_steps(c: ChargeType, spec: ModuleSpec) -> list[int]:
    """Factors ``a`` of ``prod 1/(1 - q^a)`` counting the room above the minimal degrees.

    Each block of ``n_p`` equal charges contributes ``1/(q)_{n_p}``; the top
    block ``p = k/2`` of an even level standard module keeps the parity rule
    and contributes ``1/(q^2; q^2)_{n_p}`` instead.
    """
    top = None
    if isinstance(spec, HighestWeight) and spec.level % 2 == 0:
        top = spec.level // 2
    out = []
    for p, n in enumerate(c.multiplicities, 1):
        step = 2 if p == top else 1
        out.extend(step * i for i in range(1, n + 1))
    return out


def qp_count_series(spec: ModuleSpec, N: int) -> TruncatedSeries:
    """Graded count of quasi-particle parts (no Heisenberg factor)."""
    acc = [0] * (N + 1)
    base = one(N)
    for c in enumerate_charge_types(spec, N):
        term = shift(mul_inv_many(base, gap_steps(c, spec)), min_exponent(c, spec))
        for n, x in enumerate(term.coeffs):
            acc[n] += x
    return TruncatedSeries(N, tuple(acc))


def _qp_parts(spec: ModuleSpec, D: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Backtracking over quasi-particle parts of exponent ``<= D``.

    Factors are placed right to left, so the number of factors to the right
    (the ``s - l`` of the charge-boundary condition) is always known.
    """
    cap = _charge_cap(spec)
    max_p = D if cap is None else cap
    parity_charge = None
    if isinstance(spec, HighestWeight) and spec.level % 2 == 0:
        parity_charge = spec.level // 2

    charges: list[int] = []
    degrees: list[int] = []

    def rec(used: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        yield tuple(reversed(charges)), tuple(reversed(degrees))
        placed = len(charges)
        top_p = charges[-1] if charges else max_p
        for p in range(1, top_p + 1):
            if placed == 0:
                hi = -initial_bound(spec, p)
            elif p == charges[-1]:
                hi = degrees[-1] - 2 * p
            else:
                hi = -initial_bound(spec, p) - 2 * p * placed
            lo = used - D  # -j <= D - used
            for j in range(hi, lo - 1, -1):
                if p == parity_charge and (j - spec.k0) % 2:
                    continue
                charges.append(p)
                degrees.append(j)
                yield from rec(used - j)
                charges.pop()
                degrees.pop()

    yield from rec(0)


def qp_enumerate(spec: ModuleSpec, max_exponent: int) -> list[QPMonomial]:
    """All admissible quasi-particle parts with exponent ``<= max_exponent``."""
    if max_exponent < 0:
        raise ValueError(f"max_exponent must be nonnegative, got {max_exponent}")
    out = [QPMonomial((), ch, dg) for ch, dg in _qp_parts(spec, max_exponent)]
    out.sort(key=QPMonomial.sort_key)
    return out


def qp_enumerate_counts(spec: ModuleSpec, N: int) -> TruncatedSeries:
    """Per-exponent counts from :func:`qp_enumerate`, as a series."""
    counts = [0] * (N + 1)
    for _, dg in _qp_parts(spec, N):
        counts[-sum(dg)] += 1
    return TruncatedSeries(N, tuple(counts))


def odd_partitions(D: int) -> list[tuple[int, ...]]:
    """Heisenberg parts ``(i_1 <= ... <= i_r <= -1)``, all odd, with ``-sum <= D``."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], largest: int, remaining: int) -> None:
        out.append(tuple(-x for x in prefix))
        for a in range(1, min(largest, remaining) + 1, 2):
            prefix.append(a)
            rec(prefix, a, remaining - a)
            prefix.pop()

    rec([], D, D)
    return out


def basis_enumerate(spec: ModuleSpec, max_exponent: int) -> list[QPMonomial]:
    """Full basis monomials (Heisenberg times quasi-particle) of exponent ``<= max_exponent``."""
    qps = qp_enumerate(spec, max_exponent)
    heis = odd_partitions(max_exponent)
    out = [
        QPMonomial(h, m.charges, m.degrees)
        for m in qps
        for h in heis
        if m.qp_exponent - sum(h) <= max_exponent
    ]
    out.sort(key=QPMonomial.sort_key)
    return out


def partitions_with_parts_in(residues: set[int] | frozenset[int], modulus: int, N: int) -> TruncatedSeries:
    """Count partitions of each ``n <= N`` into parts congruent to an allowed residue.

    Plain dynamic programming over the allowed part sizes; deliberately
    shares no code with the series kernels so it can serve as an oracle.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if any(r < 0 or r >= modulus for r in residues):
        raise ValueError(f"residues must lie in 0..{modulus - 1}: {sorted(residues)}")
    ways = [1] + [0] * N
    for part in range(1, N + 1):
        if part % modulus not in residues:
            continue
        for total in range(part, N + 1):
            ways[total] += ways[total - part]
    return TruncatedSeries(N, tuple(ways))
