"""Exact q-series and quasi-particle bases for principally specialized sl(2)^ characters."""

from .qseries import (
    OrderMismatchError,
    TruncatedSeries,
    add,
    coefficient,
    mul,
    mul_inv_one_minus,
    mul_one_minus,
    one,
    poch_inv,
    zero,
)
from .combinat import (
    VERMA,
    ChargeType,
    HighestWeight,
    QPMonomial,
    check_conditions,
    enumerate_charge_types,
    min_exponent,
    n_lambda,
    partitions_with_parts_in,
    qp_count_series,
    qp_enumerate,
)
from .characters import (
    GRRParams,
    grr_product,
    grr_sum,
    heisenberg_char,
    standard_char_enumerated,
    standard_char_product,
    standard_char_sum,
    verma_char,
)
from .verify import VerificationReport, compare

__version__ = "0.1.0"
