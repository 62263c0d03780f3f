"""Exact power series in ``q`` truncated at a fixed order.

A :class:`TruncatedSeries` of order ``N`` stores the ``N + 1`` integer
coefficients of ``q^0, ..., q^N``.  Coefficients are Python ints, so the
arithmetic is exact no matter how large the character values grow.  Binary
operations insist on equal orders; nothing is truncated behind your back.

    >>> f = one(4)
    >>> for a in (1, 3):
    ...     f = mul_inv_one_minus(f, a)
    >>> f.coeffs
    (1, 1, 1, 2, 2)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "OrderMismatchError",
    "TruncatedSeries",
    "one",
    "zero",
    "monomial",
    "add",
    "sub",
    "mul",
    "shift",
    "mul_inv_one_minus",
    "mul_one_minus",
    "poch_inv",
    "coefficient",
]


class OrderMismatchError(ValueError):
    """Raised when two series of different truncation orders are combined."""


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} "
                f"coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be integers, got {c!r}")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "TruncatedSeries":
        """Series whose order is ``len(coeffs) - 1``."""
        return cls(len(coeffs) - 1, tuple(int(c) for c in coeffs))

    def __len__(self) -> int:
        return self.order + 1

    def __getitem__(self, n: int) -> int:
        return coefficient(self, n)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return sub(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def truncate(self, order: int) -> "TruncatedSeries":
        """Explicitly drop every coefficient above ``order``."""
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} series to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    # canonical text form: decimal integers, lowest degree first
    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "TruncatedSeries":
        try:
            order = int(data["order"])
            coeffs = tuple(int(c) for c in data["coeffs"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed series record: {exc}") from exc
        return cls(order, coeffs)

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:12])
        tail = ", ..." if self.order >= 12 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"


def _check_order(N: int) -> None:
    if not isinstance(N, int) or N < 0:
        raise ValueError(f"order must be a nonnegative integer, got {N!r}")


def _check_same_order(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(
            f"order mismatch: {a.order} vs {b.order}; truncate explicitly first"
        )


def _check_positive(a: int, what: str = "a") -> None:
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"{what} must be a positive integer, got {a!r}")


def zero(N: int) -> TruncatedSeries:
    _check_order(N)
    return TruncatedSeries(N, (0,) * (N + 1))


def one(N: int) -> TruncatedSeries:
    _check_order(N)
    return TruncatedSeries(N, (1,) + (0,) * N)


def monomial(m: int, N: int, c: int = 1) -> TruncatedSeries:
    """``c * q**m`` truncated at ``N`` (zero when ``m > N``)."""
    _check_order(N)
    if m < 0:
        raise ValueError(f"negative exponent {m}")
    coeffs = [0] * (N + 1)
    if m <= N:
        coeffs[m] = c
    return TruncatedSeries(N, tuple(coeffs))


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same_order(a, b)
    return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_same_order(a, b)
    return TruncatedSeries(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated Cauchy product."""
    _check_same_order(a, b)
    N = a.order
    out = [0] * (N + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j in range(N + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(N, tuple(out))


def shift(s: TruncatedSeries, m: int) -> TruncatedSeries:
    """Multiply by ``q**m``; terms pushed past the order are dropped."""
    if m < 0:
        raise ValueError(f"negative shift {m}")
    N = s.order
    if m > N:
        return zero(N)
    return TruncatedSeries(N, (0,) * m + s.coeffs[: N + 1 - m])


def _inv_one_minus_inplace(c: list[int], a: int) -> None:
    # c'_n = c_n + c'_{n-a}
    for n in range(a, len(c)):
        c[n] += c[n - a]


def _one_minus_inplace(c: list[int], a: int) -> None:
    for n in range(len(c) - 1, a - 1, -1):
        c[n] -= c[n - a]


def mul_inv_one_minus(s: TruncatedSeries, a: int) -> TruncatedSeries:
    """``s / (1 - q**a)``."""
    _check_positive(a)
    c = list(s.coeffs)
    _inv_one_minus_inplace(c, a)
    return TruncatedSeries(s.order, tuple(c))


def mul_one_minus(s: TruncatedSeries, a: int) -> TruncatedSeries:
    """``s * (1 - q**a)``."""
    _check_positive(a)
    c = list(s.coeffs)
    _one_minus_inplace(c, a)
    return TruncatedSeries(s.order, tuple(c))


def mul_inv_many(s: TruncatedSeries, parts: Iterable[int]) -> TruncatedSeries:
    """Divide ``s`` by ``(1 - q**a)`` for every ``a`` in ``parts``."""
    c = list(s.coeffs)
    for a in parts:
        _check_positive(a)
        if a <= s.order:
            _inv_one_minus_inplace(c, a)
    return TruncatedSeries(s.order, tuple(c))


def poch_inv(step: int, n: int, N: int) -> TruncatedSeries:
    """``1 / prod_{i=1}^{n} (1 - q**(step*i))`` truncated at ``N``.

    ``step=1`` is ``1/(q)_n``; ``step=2`` is ``1/(q^2;q^2)_n``.
    """
    _check_positive(step, "step")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    _check_order(N)
    return mul_inv_many(one(N), (step * i for i in range(1, n + 1)))


def coefficient(s: TruncatedSeries, n: int) -> int:
    if not isinstance(n, int) or not 0 <= n <= s.order:
        raise IndexError(f"index {n!r} outside 0..{s.order}")
    return s.coeffs[n]
