"""Coefficient-exact comparison of series and the standard identity checks.

A match at order ``N`` is evidence that an identity holds through ``q^N``;
it is not a proof.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import liealg
from .characters import (
    GRRParams,
    excluded_residue_product,
    fermionic_sum,
    grr_product,
    grr_sum,
    standard_char_enumerated,
    standard_char_product,
    standard_char_sum,
    verma_char,
    verma_char_enumerated,
    verma_char_sum,
)
from .combinat import (
    VERMA,
    HighestWeight,
    ModuleSpec,
    qp_count_series,
    qp_enumerate_counts,
)
from .qseries import OrderMismatchError, TruncatedSeries, sub

__all__ = [
    "VerificationReport",
    "SuiteConfig",
    "compare",
    "complement_dimensions",
    "complement_check",
    "andrews_section8_check",
    "run_suite",
]


@dataclass(frozen=True)
class VerificationReport:
    label: str
    order: int
    status: str
    first_mismatch: int | None = None
    lhs_coeff: int | None = None
    rhs_coeff: int | None = None
    elapsed: float = 0.0
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status not in ("match", "mismatch"):
            raise ValueError(f"status must be 'match' or 'mismatch', got {self.status!r}")
        if self.status == "match" and self.first_mismatch is not None:
            raise ValueError("a matching report cannot carry a mismatch index")
        if self.status == "mismatch":
            if self.first_mismatch is None or not 0 <= self.first_mismatch <= self.order:
                raise ValueError(f"mismatch index {self.first_mismatch!r} outside 0..{self.order}")
            if self.lhs_coeff == self.rhs_coeff:
                raise ValueError("a mismatch needs differing coefficients")

    @property
    def ok(self) -> bool:
        return self.status == "match"

    def with_timing(self, elapsed: float) -> "VerificationReport":
        return VerificationReport(
            self.label, self.order, self.status, self.first_mismatch,
            self.lhs_coeff, self.rhs_coeff, elapsed, self.detail,
        )

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "label": self.label,
            "status": self.status,
            "order": self.order,
            "first_mismatch": self.first_mismatch,
            "lhs": None if self.lhs_coeff is None else str(self.lhs_coeff),
            "rhs": None if self.rhs_coeff is None else str(self.rhs_coeff),
        }
        if self.detail:
            out["detail"] = self.detail
        if timings:
            out["ms"] = round(self.elapsed * 1000, 3)
        return out

    def to_text(self, timings: bool = False) -> str:
        line = f"{self.status.upper():8s} {self.label} [order {self.order}]"
        if not self.ok:
            line += f" first mismatch at q^{self.first_mismatch}: {self.lhs_coeff} != {self.rhs_coeff}"
        if self.detail:
            line += f" ({self.detail})"
        if timings:
            line += f" {self.elapsed * 1000:.1f} ms"
        return line


def compare(a: TruncatedSeries, b: TruncatedSeries, label: str) -> VerificationReport:
    if a.order != b.order:
        raise OrderMismatchError(f"{label}: order mismatch {a.order} vs {b.order}")
    for n, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return VerificationReport(label, a.order, "mismatch", n, x, y)
    return VerificationReport(label, a.order, "match")


def _timed(fn: Callable[[], VerificationReport]) -> VerificationReport:
    start = time.perf_counter()
    report = fn()
    return report.with_timing(time.perf_counter() - start)


def complement_dimensions(w: HighestWeight, N: int) -> TruncatedSeries:
    """Graded dimensions of the maximal submodule: Verma minus standard."""
    return sub(verma_char(N), standard_char_enumerated(w, N))


def complement_check(w: HighestWeight, N: int) -> VerificationReport:
    """Check ``dim W_n >= 0`` for all ``n <= N``.

    For ``w = (l+1, l)`` also check ``dim W_{l+1} = 1`` and ``dim W_{l+2} = 3``.
    """
    w.require_standard()
    start = time.perf_counter()
    dims = complement_dimensions(w, N)
    label = f"complement {w}"
    expected: dict[int, int] = {}
    if w.k0 == w.k1 + 1:
        l = w.k1
        expected = {l + 1: 1, l + 2: 3}
    notes = [f"dim W_{n}={dims[n]}" for n in sorted(expected) if n <= N]
    detail = ", ".join(notes)
    report = VerificationReport(label, N, "match", detail=detail)
    for n, d in enumerate(dims.coeffs):
        want = expected.get(n)
        if want is not None and d != want:
            report = VerificationReport(label, N, "mismatch", n, d, want, detail=detail)
            break
        if d < 0:
            report = VerificationReport(label, N, "mismatch", n, d, 0, detail=f"negative dim W_{n}")
            break
    return report.with_timing(time.perf_counter() - start)


def andrews_section8_check(l: int, N: int) -> VerificationReport:
    """Product over ``n != 0, +-(l+2) mod 2l+3`` against ``sum q^(N_1^2+...+N_l^2)/(q)_{n_1}...(q)_{n_l}``."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    M = 2 * l + 3
    a = l + 2

    def run() -> VerificationReport:
        lhs = excluded_residue_product({0, a % M, (-a) % M}, M, N)
        rhs = fermionic_sum(l, l + 1, 1, N)
        return compare(lhs, rhs, f"andrews l={l}")

    return _timed(run)


def _liealg_report(window: int) -> VerificationReport:
    ok_anti = liealg.antisymmetry_check(window)
    ok_jacobi = liealg.jacobi_check(window)
    spot = (
        liealg.bracket(liealg.X(1), liealg.X(-1)) == {liealg.C: -1}
        and liealg.bracket(liealg.B(1), liealg.B(-1)) == {liealg.C: 1}
        and liealg.bracket(liealg.B(1), liealg.X(0)) == {liealg.X(1): 2}
    )
    failed = [name for name, ok in (("antisymmetry", ok_anti), ("jacobi", ok_jacobi), ("brackets", spot)) if not ok]
    label = f"liealg window={window}"
    if failed:
        # boolean checks have no coefficient; report 0 observed vs 1 expected
        return VerificationReport(label, window, "mismatch", 0, 0, 1, detail="failed: " + ",".join(failed))
    return VerificationReport(label, window, "match", detail="antisymmetry, jacobi, brackets")


@dataclass(frozen=True)
class SuiteConfig:
    """Which checks to run and at what order.

    Empty tuples deselect a family; flags switch off the single checks.
    """

    order: int = 60
    grr: tuple[GRRParams, ...] = field(
        default_factory=lambda: tuple(
            GRRParams(l, s, r) for l in range(2, 6) for s in (0, 1) for r in range(1, l)
        )
    )
    modules: tuple[HighestWeight, ...] = field(
        default_factory=lambda: tuple(
            HighestWeight(k0, k - k0) for k in range(1, 8) for k0 in range(k, -1, -1)
        )
    )
    verma: bool = True
    complements: tuple[HighestWeight, ...] = field(
        default_factory=lambda: tuple(HighestWeight(l + 1, l) for l in (1, 2, 3))
    )
    section8: tuple[int, ...] = (1, 2, 3, 4)
    liealg_window: int | None = 8
    oracle_order: int | None = 25

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 0:
            raise ValueError(f"order must be a nonnegative integer, got {self.order!r}")
        for w in self.modules + self.complements:
            if not isinstance(w, HighestWeight):
                raise TypeError(f"expected HighestWeight, got {w!r}")
            w.require_standard()
        for p in self.grr:
            if not isinstance(p, GRRParams):
                raise TypeError(f"expected GRRParams, got {p!r}")
        if any(l < 1 for l in self.section8):
            raise ValueError(f"section8 levels must be >= 1: {self.section8}")
        if self.liealg_window is not None and self.liealg_window < 1:
            raise ValueError("liealg_window must be positive")
        if self.oracle_order is not None and self.oracle_order < 0:
            raise ValueError("oracle_order must be nonnegative")

    @classmethod
    def empty(cls, order: int = 60) -> "SuiteConfig":
        return cls(order, (), (), False, (), (), None, None)


def module_reports(w: HighestWeight, N: int) -> list[VerificationReport]:
    def run() -> list[VerificationReport]:
        prod = standard_char_product(w, N)
        return [
            compare(prod, standard_char_sum(w, N), f"module {w} product=sum"),
            compare(prod, standard_char_enumerated(w, N), f"module {w} product=enumerated"),
        ]

    start = time.perf_counter()
    reports = run()
    elapsed = (time.perf_counter() - start) / len(reports)
    return [r.with_timing(elapsed) for r in reports]


def verma_reports(N: int) -> list[VerificationReport]:
    return [
        _timed(lambda: compare(verma_char(N), verma_char_enumerated(N), "verma product=enumerated")),
        _timed(lambda: compare(verma_char(N), verma_char_sum(N), "verma product=sum")),
    ]


def oracle_report(spec: ModuleSpec, D: int) -> VerificationReport:
    return _timed(
        lambda: compare(qp_count_series(spec, D), qp_enumerate_counts(spec, D), f"oracle {spec} count=enumerate")
    )


def run_suite(config: SuiteConfig) -> list[VerificationReport]:
    """Run every selected check; failures are collected, never raised."""
    if not isinstance(config, SuiteConfig):
        raise TypeError(f"expected SuiteConfig, got {type(config).__name__}")
    N = config.order
    reports: list[VerificationReport] = []
    for p in config.grr:
        reports.append(_timed(lambda p=p: compare(grr_product(p, N), grr_sum(p, N), f"grr {p}")))
    if config.verma:
        reports.extend(verma_reports(N))
    for w in config.modules:
        reports.extend(module_reports(w, N))
    for w in config.complements:
        reports.append(complement_check(w, N))
    for l in config.section8:
        reports.append(andrews_section8_check(l, N))
    if config.liealg_window is not None:
        reports.append(_timed(lambda: _liealg_report(config.liealg_window)))
    if config.oracle_order is not None:
        D = min(config.oracle_order, N)
        specs: Iterable[ModuleSpec] = ([VERMA] if config.verma else []) + list(config.modules)
        for spec in specs:
            reports.append(oracle_report(spec, D))
    return reports
