"""Точные числа классов изоморфизма и числа кортежей A(N), B(N), C(N)."""

from igc_census.formulas import (
    MIN_N,
    CensusArrays,
    CensusRecord,
    IntegralityError,
    PartialSums,
    census_arrays,
    census_record,
    count_I,
    count_I_of,
    count_Ic,
    count_Ic_of,
    count_P,
    count_P_of,
    iter_census,
    partial_sums,
    partial_sums_at,
)
from igc_census.local_factors import (
    LOCAL_FACTORS,
    CensusError,
    g1,
    g2,
    g3,
    g4,
    g_multiplicative,
    g_multiplicative_of,
    g_upper,
)
from igc_census.tuple_counts import (
    DEFAULT_DIRECT_PATH_CAP,
    TupleCounts,
    connected_total,
    connected_tuples_for,
    coprime_count,
    coprime_count_main_term,
    coprime_error_bounds_hold,
    coprime_sum,
    coprime_sum_main_term,
    gpg_tuple_array,
    gpg_tuples_for,
    iter_tuple_counts_direct,
    total_tuples,
    tuple_counts_at,
    tuple_counts_direct,
    tuple_counts_fast,
)

__all__ = [
    "MIN_N",
    "DEFAULT_DIRECT_PATH_CAP",
    "CensusError",
    "IntegralityError",
    "CensusRecord",
    "CensusArrays",
    "PartialSums",
    "TupleCounts",
    "LOCAL_FACTORS",
    "g1",
    "g2",
    "g3",
    "g4",
    "g_upper",
    "g_multiplicative",
    "g_multiplicative_of",
    "count_I",
    "count_Ic",
    "count_P",
    "count_I_of",
    "count_Ic_of",
    "count_P_of",
    "census_record",
    "census_arrays",
    "iter_census",
    "partial_sums",
    "partial_sums_at",
    "coprime_count",
    "coprime_sum",
    "coprime_count_main_term",
    "coprime_sum_main_term",
    "coprime_error_bounds_hold",
    "gpg_tuples_for",
    "gpg_tuple_array",
    "connected_tuples_for",
    "connected_total",
    "tuple_counts_at",
    "total_tuples",
    "iter_tuple_counts_direct",
    "tuple_counts_direct",
    "tuple_counts_fast",
]
