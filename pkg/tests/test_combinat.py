import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import count_partitions, naive_qp_counts
from qpchar.combinat import (
    VERMA,
    ChargeType,
    HighestWeight,
    QPMonomial,
    basis_enumerate,
    check_conditions,
    enumerate_charge_types,
    min_exponent,
    min_exponent_closed_form,
    minimal_degrees,
    n_lambda,
    odd_partitions,
    partitions_with_parts_in,
    qp_count_series,
    qp_enumerate,
    qp_enumerate_counts,
)
from qpchar.qseries import mul_inv_many, one

ALL_WEIGHTS = [HighestWeight(k0, k - k0) for k in range(1, 8) for k0 in range(k + 1)]
W = HighestWeight


def qp(charges, degrees, heis=()):
    return QPMonomial(tuple(heis), tuple(charges), tuple(degrees))


class TestHighestWeight:
    def test_derived(self):
        w = W(4, 1)
        assert (w.level, w.t, w.i, w.max_charge) == (5, 1, 2, 2)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            W(-1, 2)

    def test_level_zero_not_standard(self):
        with pytest.raises(ValueError):
            W(0, 0).require_standard()
        with pytest.raises(ValueError):
            qp_count_series(W(0, 0), 5)


class TestNLambda:
    def test_examples(self):
        assert n_lambda(W(3, 2), 2) == 2
        assert n_lambda(W(4, 1), 2) == 3

    @pytest.mark.parametrize("k", range(2, 8))
    def test_k_lambda0(self, k):
        for p in range(1, k // 2 + 1):
            assert n_lambda(W(k, 0), p) == 2 * p

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            n_lambda(W(3, 2), 3)
        with pytest.raises(ValueError):
            n_lambda(W(3, 2), 0)


class TestChargeType:
    def test_partial_sums(self):
        c = ChargeType.from_charges((1, 1, 2))
        assert c.multiplicities == (2, 1)
        assert c.partial_sums == (3, 1)
        assert c.N(1) == 3 and c.N(2) == 1 and c.N(3) == 0
        assert c.charges == (1, 1, 2)
        assert c.total_charge == 4

    def test_trailing_zeros_stripped(self):
        assert ChargeType((1, 0, 0)) == ChargeType((1,))

    def test_order(self):
        # more total charge first; then reverse-lex on the tuple
        a = ChargeType.from_charges((2, 3))
        b = ChargeType.from_charges((1, 2))
        c = ChargeType.from_charges((1, 4))
        assert a.order_key() < b.order_key()
        assert a.order_key() < c.order_key()


class TestCheckConditions:
    def test_listed_examples(self):
        assert check_conditions(qp((1, 1), (-3, -1)), VERMA)
        assert not check_conditions(qp((1, 1), (-2, -1)), VERMA)
        assert check_conditions(qp((1,), (-1,)), W(2, 1))
        assert not check_conditions(qp((1,), (-2,)), W(1, 1))
        assert check_conditions(qp((1,), (-1,)), W(1, 1))

    def test_charge_cap(self):
        assert not check_conditions(qp((2,), (-5,)), W(2, 1))
        assert check_conditions(qp((2,), (-5,)), VERMA)

    def test_boundary_condition(self):
        # (V4): j_1 <= -p_1 - 2 p_1 (s - 1) = -3 for charges (1, 2)
        assert check_conditions(qp((1, 2), (-3, -2)), VERMA)
        assert not check_conditions(qp((1, 2), (-2, -2)), VERMA)

    def test_heisenberg_part(self):
        assert check_conditions(qp((), (), heis=(-3, -1)), VERMA)
        assert not check_conditions(qp((), (), heis=(-2,)), VERMA)

    def test_structure_validated(self):
        with pytest.raises(ValueError):
            qp((2, 1), (-4, -1))
        with pytest.raises(ValueError):
            qp((1,), ())


class TestMinExponent:
    def test_examples(self):
        c = ChargeType.from_charges((1, 1, 2))
        assert minimal_degrees(c, VERMA) == (-5, -3, -2)
        assert min_exponent(c, VERMA) == 10
        assert minimal_degrees(ChargeType.from_charges((1, 1)), W(3, 0)) == (-4, -2)
        assert min_exponent(ChargeType.from_charges((1, 1)), W(3, 0)) == 6
        assert min_exponent(ChargeType(), VERMA) == 0

    def test_charge_cap_rejected(self):
        with pytest.raises(ValueError):
            min_exponent(ChargeType.from_charges((2,)), W(2, 1))

    @pytest.mark.parametrize("spec", [VERMA] + ALL_WEIGHTS, ids=str)
    def test_greedy_equals_closed_form(self, spec):
        for c in enumerate_charge_types(spec, 30):
            assert min_exponent(c, spec) == min_exponent_closed_form(c, spec)

    @pytest.mark.parametrize("spec", [VERMA] + ALL_WEIGHTS, ids=str)
    def test_minimal_degrees_admissible_and_maximal(self, spec):
        for c in enumerate_charge_types(spec, 20):
            degrees = minimal_degrees(c, spec)
            assert check_conditions(qp(c.charges, degrees), spec)
            # raising any single degree breaks admissibility
            for l in range(len(degrees)):
                bumped = list(degrees)
                bumped[l] += 1
                if all(a <= b or p < q for a, b, p, q in zip(bumped, bumped[1:], c.charges, c.charges[1:])):
                    assert not check_conditions(qp(c.charges, bumped), spec)


class TestEnumerateChargeTypes:
    def test_verma_budget_4(self):
        got = [c.charges for c in enumerate_charge_types(VERMA, 4)]
        assert got == [(4,), (3,), (1, 1), (2,), (1,), ()]
        assert min_exponent(ChargeType.from_charges((1, 2)), VERMA) == 5

    def test_level_one(self):
        for budget in (0, 5, 20):
            assert enumerate_charge_types(W(1, 0), budget) == [ChargeType()]

    def test_budget_zero(self):
        assert enumerate_charge_types(VERMA, 0) == [ChargeType()]

    @pytest.mark.parametrize(
        "spec,length,max_entry",
        [(VERMA, 14, 1), (VERMA, 4, 3), (W(4, 0), 2, 4), (W(3, 4), 3, 4)],
        ids=str,
    )
    def test_complete(self, spec, length, max_entry):
        # every charge type in the box shows up iff its minimal exponent fits the budget
        budget = 14
        found = set(enumerate_charge_types(spec, budget))
        assert all(min_exponent(c, spec) <= budget for c in found)
        for mult in _vectors(length, max_entry):
            c = ChargeType(mult)
            assert (c in found) == (min_exponent(c, spec) <= budget)


def _vectors(length, max_entry):
    if length == 0:
        yield ()
        return
    for head in range(max_entry + 1):
        for rest in _vectors(length - 1, max_entry):
            yield (head,) + rest


class TestQPCounts:
    def test_verma_spot(self):
        assert qp_count_series(VERMA, 2)[2] == 2

    def test_level_one_is_trivial(self):
        assert qp_count_series(W(1, 0), 20) == one(20)
        assert qp_count_series(W(0, 1), 20) == one(20)

    def test_w30_matches_andrews_sum(self):
        # sum q^(n^2+n)/(q)_n = partitions into parts = +-2 mod 5
        assert list(qp_count_series(W(3, 0), 10).coeffs) == count_partitions(10, lambda a: a % 5 in (2, 3))

    def test_verma_qp_counts_are_partition_numbers(self):
        assert list(qp_count_series(VERMA, 40).coeffs) == count_partitions(40)

    def test_enumerate_examples(self):
        assert [str(m) for m in qp_enumerate(VERMA, 2)] == ["1", "X1(-1)", "X1(-2)", "X2(-2)"]
        assert [str(m) for m in qp_enumerate(W(2, 1), 2)] == ["1", "X1(-1)", "X1(-2)"]

    def test_enumerate_only_admissible(self):
        for spec in (VERMA, W(2, 2), W(5, 1)):
            for m in qp_enumerate(spec, 12):
                assert check_conditions(m, spec)

    def test_parity_rule(self):
        for w in ALL_WEIGHTS:
            if w.level % 2:
                continue
            top = w.level // 2
            for m in qp_enumerate(w, 18):
                for p, j in zip(m.charges, m.degrees):
                    if p == top:
                        assert (j - w.k0) % 2 == 0

    @pytest.mark.parametrize(
        "spec,frozen",
        [
            (VERMA, [1, 1, 2, 3, 5, 7, 11, 15, 22]),
            (W(2, 1), [1, 1, 1, 1, 2, 2, 3, 3, 4]),
            (W(1, 1), [1, 1, 0, 1, 1, 1, 1, 1, 2]),
            (W(3, 0), [1, 0, 1, 1, 1, 1, 2, 2, 3]),
            (W(2, 2), None),
            (W(4, 0), None),
            (W(5, 1), None),
        ],
        ids=str,
    )
    def test_brute_force_oracle(self, spec, frozen):
        if spec is VERMA:
            naive = naive_qp_counts(8)
        else:
            naive = naive_qp_counts(8, spec.k0, spec.k1)
        if frozen is not None:
            assert naive == frozen
        assert list(qp_count_series(spec, 8).coeffs) == naive
        assert list(qp_enumerate_counts(spec, 8).coeffs) == naive

    @pytest.mark.parametrize("spec", [VERMA] + ALL_WEIGHTS, ids=str)
    def test_enumeration_equals_count_series(self, spec):
        assert qp_enumerate_counts(spec, 25) == qp_count_series(spec, 25)

    def test_deterministic_order(self):
        a = [str(m) for m in qp_enumerate(W(4, 3), 15)]
        b = [str(m) for m in qp_enumerate(W(4, 3), 15)]
        assert a == b
        keys = [m.sort_key() for m in qp_enumerate(W(4, 3), 15)]
        assert keys == sorted(keys)


class TestBasisListing:
    def test_verma_exponent_2(self):
        got = [str(m) for m in basis_enumerate(VERMA, 2)]
        assert got == ["1", "B(-1)", "X1(-1)", "B(-1)B(-1)", "B(-1) X1(-1)", "X1(-2)", "X2(-2)"]

    def test_standard_exponent_2(self):
        got = [str(m) for m in basis_enumerate(W(2, 1), 2)]
        assert got == ["1", "B(-1)", "X1(-1)", "B(-1)B(-1)", "B(-1) X1(-1)", "X1(-2)"]

    def test_odd_partitions(self):
        assert sorted(odd_partitions(3)) == sorted([(), (-1,), (-1, -1), (-1, -1, -1), (-3,)])

    def test_text_and_json(self):
        m = qp((1, 2), (-4, -1), heis=(-3, -1))
        assert str(m) == "B(-3)B(-1) X1(-4)X2(-1)"
        assert m.to_dict() == {"heis": [-3, -1], "charges": [1, 2], "degrees": [-4, -1]}
        assert m.exponent == 9


class TestPartitionsWithPartsIn:
    def test_examples(self):
        assert partitions_with_parts_in({1, 4}, 5, 4)[4] == 2
        assert list(partitions_with_parts_in({0}, 1, 10).coeffs) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert partitions_with_parts_in(set(), 7, 9) == one(9)

    def test_bad_residue(self):
        with pytest.raises(ValueError):
            partitions_with_parts_in({5}, 5, 3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 9).flatmap(lambda m: st.tuples(st.just(m), st.sets(st.integers(0, m - 1)))))
    def test_agrees_with_series_product(self, case):
        m, residues = case
        N = 60
        product = mul_inv_many(one(N), (n for n in range(1, N + 1) if n % m in residues))
        assert partitions_with_parts_in(residues, m, N) == product
