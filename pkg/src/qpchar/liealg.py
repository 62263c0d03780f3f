"""Structure constants of twisted affine sl(2) in the principal picture.

Basis: ``B(m)`` for odd ``m``, ``X(n)`` for every integer ``n``, the central
element ``c`` and the degree operator ``d``.  Brackets::

    [B(m), B(n)] = m delta_{m+n,0} c
    [B(m), X(n)] = 2 X(m+n)
    [X(m), X(n)] = (-1)^(m+1) 2 B(m+n) + (-1)^m m delta_{m+n,0} c
    [d, B(n)] = n B(n),   [d, X(n)] = n X(n)

with ``B(even) = 0`` wherever it shows up on a right-hand side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping

from .qseries import TruncatedSeries, mul, mul_inv_many, one, poch_inv

__all__ = [
    "BasisElement",
    "LieCombination",
    "B",
    "X",
    "C",
    "D",
    "bracket",
    "bracket_comb",
    "basis_window",
    "antisymmetry_check",
    "jacobi_check",
    "pbw_count",
    "pbw_count_enumerated",
]

_KINDS = ("B", "X", "C", "D")
_KIND_RANK = {k: i for i, k in enumerate(_KINDS)}


@dataclass(frozen=True)
class BasisElement:
    kind: str
    index: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.kind in ("C", "D"):
            if self.index is not None:
                raise ValueError(f"{self.kind.lower()} carries no index")
        elif not isinstance(self.index, int):
            raise ValueError(f"{self.kind} needs an integer index")
        elif self.kind == "B" and self.index % 2 == 0:
            raise ValueError(f"B({self.index}) is malformed: B takes odd indices only")

    @property
    def degree(self) -> int:
        return self.index if self.index is not None else 0

    def sort_key(self) -> tuple[int, int]:
        return (_KIND_RANK[self.kind], self.index or 0)

    def __str__(self) -> str:
        if self.index is None:
            return self.kind.lower()
        return f"{self.kind}({self.index})"


def B(m: int) -> BasisElement:
    return BasisElement("B", m)


def X(n: int) -> BasisElement:
    return BasisElement("X", n)


C = BasisElement("C")
D = BasisElement("D")


class LieCombination:
    """Finite integer combination of basis elements; zero terms are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[BasisElement, int] | Iterable[tuple[BasisElement, int]] = ()):
        acc: dict[BasisElement, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c != 0}

    @property
    def terms(self) -> dict[BasisElement, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LieCombination):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == LieCombination(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LieCombination") -> "LieCombination":
        return LieCombination(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "LieCombination":
        return LieCombination({e: -c for e, c in self._terms.items()})

    def __rmul__(self, k: int) -> "LieCombination":
        return LieCombination({e: k * c for e, c in self._terms.items()})

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{e}" for e, c in self.items())


def _b_or_zero(n: int, coeff: int) -> list[tuple[BasisElement, int]]:
    return [(B(n), coeff)] if n % 2 else []


def bracket(x: BasisElement, y: BasisElement) -> LieCombination:
    """Lie bracket of two basis elements, expanded in the basis."""
    kx, ky = x.kind, y.kind
    if kx == "C" or ky == "C":
        return LieCombination()
    if kx == "D" and ky == "D":
        return LieCombination()
    if kx == "D":
        return LieCombination({y: y.index})
    if ky == "D":
        return LieCombination({x: -x.index})

    m, n = x.index, y.index
    if kx == "B" and ky == "B":
        return LieCombination({C: m} if m + n == 0 else {})
    if kx == "B" and ky == "X":
        return LieCombination({X(m + n): 2})
    if kx == "X" and ky == "B":
        return LieCombination({X(m + n): -2})
    # X, X
    sign = -1 if m % 2 else 1  # (-1)^m
    terms = _b_or_zero(m + n, -2 * sign)
    if m + n == 0:
        terms.append((C, sign * m))
    return LieCombination(terms)


def bracket_comb(a: LieCombination, b: LieCombination) -> LieCombination:
    """Bilinear extension of :func:`bracket`."""
    out: list[tuple[BasisElement, int]] = []
    for x, cx in a._terms.items():
        for y, cy in b._terms.items():
            for e, c in bracket(x, y)._terms.items():
                out.append((e, cx * cy * c))
    return LieCombination(out)


def basis_window(window: int) -> list[BasisElement]:
    """All ``B(m)``, ``X(n)`` with ``|index| <= window``, plus ``c`` and ``d``."""
    if window < 1:
        raise ValueError(f"window must be positive, got {window}")
    elems = [B(m) for m in range(-window, window + 1) if m % 2]
    elems += [X(n) for n in range(-window, window + 1)]
    return elems + [C, D]


def antisymmetry_check(window: int) -> bool:
    elems = basis_window(window)
    return all(bracket(x, y) == -bracket(y, x) for x in elems for y in elems)


def _jacobi_violations(window: int) -> Iterator[tuple[BasisElement, BasisElement, BasisElement]]:
    elems = basis_window(window)
    single = {e: LieCombination({e: 1}) for e in elems}
    inner = {(x, y): bracket(x, y) for x in elems for y in elems}
    for x, y, z in product(elems, repeat=3):
        total = (
            bracket_comb(single[x], inner[y, z])
            + bracket_comb(single[y], inner[z, x])
            + bracket_comb(single[z], inner[x, y])
        )
        if total:
            yield (x, y, z)


def jacobi_check(window: int) -> bool:
    """Exhaustive Jacobi identity over every basis triple in the window."""
    return next(_jacobi_violations(window), None) is None


def pbw_count(max_x: int | None, N: int) -> TruncatedSeries:
    """Graded count of PBW monomials ``B(i_1)...B(i_r) X(j_1)...X(j_s) v``.

    The ``i`` are odd and ``<= -1``, the ``j`` are ``<= -1`` and at most
    ``max_x`` of them appear (``None`` for no cap, i.e. the whole Verma
    module).  Coefficient ``n`` counts monomials of total degree ``-n``.
    """
    heis = mul_inv_many(one(N), range(1, N + 1, 2))
    cap = N if max_x is None else min(max_x, N)
    # partitions into at most `cap` parts == partitions with parts <= cap
    return mul(heis, poch_inv(1, cap, N))


def pbw_count_enumerated(max_x: int | None, N: int) -> TruncatedSeries:
    """Backtracking count of the same monomials; slow, meant as a cross-check."""
    counts = [0] * (N + 1)
    cap = N if max_x is None else max_x

    def x_parts(remaining: int, largest: int, used: int, total: int, heis_total: int) -> None:
        counts[heis_total + total] += 1
        if used == cap:
            return
        for j in range(1, min(largest, remaining) + 1):
            x_parts(remaining - j, j, used + 1, total + j, heis_total)

    def b_parts(remaining: int, largest: int, total: int) -> None:
        x_parts(N - total, N, 0, 0, total)
        for i in range(1, min(largest, remaining) + 1, 2):
            b_parts(remaining - i, i, total + i)

    b_parts(N, N, 0)
    return TruncatedSeries(N, tuple(counts))
