"""Acceptance gates, one test per criterion.

Each test records a PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary.  Run standalone with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import time

import pytest

from oracles import count_partitions
from qpchar import liealg
from qpchar.characters import (
    GRRParams,
    grr_product,
    grr_sum,
    heisenberg_char,
    identity_family,
    partition_series,
    standard_char_enumerated,
    standard_char_product,
    standard_char_sum,
    verma_char,
)
from qpchar.cli import main
from qpchar.combinat import (
    VERMA,
    HighestWeight,
    enumerate_charge_types,
    min_exponent,
    min_exponent_closed_form,
    qp_count_series,
    qp_enumerate_counts,
)
from qpchar.qseries import mul
from qpchar.verify import andrews_section8_check, compare, complement_dimensions

RESULTS: dict[int, str] = {}

ALL_W = [HighestWeight(k0, k - k0) for k in range(1, 8) for k0 in range(k + 1)]


def record(n: int, ok: bool, note: str) -> None:
    RESULTS[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {note}"
    print(RESULTS[n])
    assert ok, note


def test_1_rogers_ramanujan():
    start = time.perf_counter()
    reports = [compare(grr_product(GRRParams(2, 1, r), 200), grr_sum(GRRParams(2, 1, r), 200), f"r={r}")
               for r in (1, 2)]
    elapsed = time.perf_counter() - start
    head = list(grr_product(GRRParams(2, 1, 2), 10).coeffs)
    oracle = count_partitions(10, allowed=lambda n: n % 5 in (1, 4))
    ok = all(r.ok for r in reports) and head == oracle == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6] and elapsed < 1
    record(1, ok, f"l=2 s=1 r=1,2 match to order 200, head {head[:11]}, {elapsed:.2f}s")


def test_2_grr_family():
    start = time.perf_counter()
    params = [GRRParams(l, s, r) for l in range(2, 6) for s in (0, 1) for r in range(1, l)]
    bad = [str(p) for p in params if not compare(grr_product(p, 100), grr_sum(p, 100), str(p)).ok]
    elapsed = time.perf_counter() - start
    record(2, not bad and elapsed < 30, f"{len(params)} identities at order 100, failures {bad}, {elapsed:.2f}s")


def test_3_verma():
    F = heisenberg_char(60)
    lhs = mul(qp_count_series(VERMA, 60), F)
    rhs = mul(F, partition_series(60))
    brute = compare(qp_count_series(VERMA, 25), qp_enumerate_counts(VERMA, 25), "brute")
    head = list(verma_char(3).coeffs)
    ok = compare(lhs, rhs, "verma").ok and brute.ok and head == [1, 2, 4, 8]
    record(3, ok, f"order 60 match, brute force to 25 {brute.status}, head {head}")


def test_4_three_way():
    start = time.perf_counter()
    bad = []
    for w in ALL_W:
        prod = standard_char_product(w, 60)
        if not (prod == standard_char_sum(w, 60) == standard_char_enumerated(w, 60)):
            bad.append(str(w))
    families = {identity_family(w) for w in ALL_W}
    elapsed = time.perf_counter() - start
    ok = not bad and families == {"andrews", "bressoud", "bressoud2"} and elapsed < 120
    record(4, ok, f"{len(ALL_W)} modules, families {sorted(families)}, failures {bad}, {elapsed:.2f}s")


def test_5_complement_dimensions():
    notes = []
    ok = True
    for l in (1, 2, 3):
        dims = complement_dimensions(HighestWeight(l + 1, l), 60)
        ok &= dims[l + 1] == 1 and dims[l + 2] == 3 and min(dims.coeffs) >= 0
        notes.append(f"l={l}: {dims[l + 1]},{dims[l + 2]}")
    negative = [str(w) for w in ALL_W if min(complement_dimensions(w, 60).coeffs) < 0]
    record(5, ok and not negative, f"{'; '.join(notes)}; negative dims {negative}")


def test_6_closing_identity():
    reports = [andrews_section8_check(l, 100) for l in (1, 2, 3, 4)]
    record(6, all(r.ok for r in reports), ", ".join(f"{r.label} {r.status}" for r in reports))


def test_7_lie_structure():
    B, X, C = liealg.B, liealg.X, liealg.C
    ok = (
        liealg.antisymmetry_check(8)
        and liealg.jacobi_check(8)
        and liealg.bracket(X(1), X(-1)) == {C: -1}
        and liealg.bracket(B(1), B(-1)) == {C: 1}
        and liealg.bracket(B(1), X(0)) == {X(1): 2}
    )
    record(7, ok, "antisymmetry and Jacobi for |index| <= 8, defining brackets")


def test_8_min_exponent():
    checked = 0
    bad = []
    for spec in [VERMA] + ALL_W:
        for c in enumerate_charge_types(spec, 30):
            checked += 1
            if min_exponent(c, spec) != min_exponent_closed_form(c, spec):
                bad.append((str(spec), c.multiplicities))
    record(8, checked > 0 and not bad, f"{checked} charge types, failures {bad[:3]}")


def test_9_determinism(capsys):
    outputs = []
    for _ in range(2):
        code = main(["verify", "all", "--format", "json"])
        outputs.append(capsys.readouterr().out)
    json.loads(outputs[0])
    with capsys.disabled():
        record(9, code == 0 and outputs[0] == outputs[1], f"{len(outputs[0])} bytes, identical={outputs[0] == outputs[1]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
