"""Тесты для точных чисел классов и чисел кортежей."""

import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from igc_census import (
    CensusError,
    TupleCounts,
    census_arrays,
    census_record,
    connected_total,
    connected_tuples_for,
    coprime_count,
    coprime_count_main_term,
    coprime_error_bounds_hold,
    coprime_sum,
    count_I,
    count_Ic,
    count_P,
    g1,
    g2,
    g3,
    g4,
    g_multiplicative,
    g_upper,
    gpg_tuple_array,
    gpg_tuples_for,
    iter_census,
    iter_tuple_counts_direct,
    partial_sums,
    partial_sums_at,
    total_tuples,
    tuple_counts_at,
    tuple_counts_direct,
    tuple_counts_fast,
)
from igc_numtheory import build_sieve, tau


def test_local_factor_values():
    """Тест: значения локальных множителей на малых степенях простых."""
    assert (g1(2, 2), g2(2, 2), g3(2, 2), g4(2, 1)) == (10, 8, 4, 2)
    assert g1(3, 1) == 5
    assert g4(3, 1) == 1
    assert g4(5, 1) == 3
    assert g3(2, 1) == 2
    assert g2(3, 2) == 5


def test_local_factor_rejects_non_prime():
    """Тест: составное основание или нулевой показатель отклоняются."""
    with pytest.raises(CensusError):
        g1(4, 1)
    with pytest.raises(CensusError):
        g2(3, 0)


def test_g1_at_prime_is_p_plus_two():
    """Тест: g₁(p) = p + 2."""
    for p in sympy.primerange(2, 1000):
        assert g1(p, 1) == p + 2


def test_g_multiplicative(small_sieve):
    """Тест: мультипликативное продолжение и значение в единице."""
    assert g_multiplicative(1, 12, small_sieve) == 50
    for index in (1, 2, 3, 4, "u"):
        assert g_multiplicative(index, 1, small_sieve) == 1
    with pytest.raises(CensusError):
        g_multiplicative(5, 12, small_sieve)


def test_upper_factor_dominates():
    """Тест: g₂, g₃, g₄ не превосходят (k + 1)²."""
    for p in sympy.primerange(2, 1000):
        for k in range(1, 21):
            bound = g_upper(p, k)
            assert bound == (k + 1) ** 2
            assert max(g2(p, k), g3(p, k), g4(p, k)) <= bound


def test_upper_factor_is_tau_squared(small_sieve):
    """Тест: g_u(n) = τ(n)² для n <= 10⁴."""
    for n in range(1, 10_001):
        assert g_multiplicative("u", n, small_sieve) == tau(n, small_sieve) ** 2


def test_g1_gcd_identity(small_sieve):
    """Тест: g₁(n) = (1/φ(n))·Σ gcd(n, a − 1)² по a, взаимно простым с n, для n <= 2000."""
    for n in range(2, 2001):
        total = sum(math.gcd(n, a - 1) ** 2 for a in range(1, n + 1) if math.gcd(a, n) == 1)
        assert Fraction(total, int(sympy.totient(n))) == g_multiplicative(1, n, small_sieve), n


@pytest.mark.parametrize(
    "n, i_count, ic_count, p_count",
    [(3, 1, 1, 1), (4, 1, 1, 1), (5, 2, 2, 2), (6, 3, 2, 2)],
)
def test_class_counts_small(small_sieve, n, i_count, ic_count, p_count):
    """Тест: числа классов при малых n."""
    assert count_I(n, small_sieve) == i_count
    assert count_Ic(n, small_sieve) == ic_count
    assert count_P(n, small_sieve) == p_count


def test_class_counts_reject_small_n(small_sieve):
    """Тест: n < 3 отклоняется всеми формулами."""
    for formula in (count_I, count_Ic, count_P):
        with pytest.raises(CensusError):
            formula(2, small_sieve)


def test_census_record_ordering(small_sieve):
    """Тест: 0 <= P <= I и 0 <= I_c <= I, формулы целочисленны до 10⁴."""
    for n in range(3, 10_001):
        record = census_record(n, small_sieve)
        assert 0 <= record.p_count <= record.i_count
        assert 0 <= record.ic_count <= record.i_count


def test_partial_sums_start_at_three(small_sieve):
    """Тест: CI(3) = CI_c(3) = CP(3) = 1."""
    sums = partial_sums(3, small_sieve)
    assert (sums.ci, sums.ci_c, sums.cp) == (1, 1, 1)


def test_partial_sums_at_matches_single_runs(small_sieve):
    """Тест: один проход по нескольким границам даёт те же суммы."""
    batch = partial_sums_at([500, 50, 50, 200], small_sieve)
    assert [s.n for s in batch] == [50, 200, 500]
    for sums in batch:
        assert sums == partial_sums(sums.n, small_sieve)


def test_iter_census_accumulates(small_sieve):
    """Тест: накопленные суммы равны суммам строк."""
    rows = list(iter_census(100, small_sieve))
    assert rows[-1][1].ci == sum(record.i_count for record, _ in rows)
    assert rows[0][0].n == 3


def test_iter_census_out_of_sieve():
    """Тест: граница за пределом решета отклоняется."""
    sieve = build_sieve(100)
    with pytest.raises(ValueError):
        list(iter_census(101, sieve))


def test_total_tuples_closed_form():
    """Тест: A(N) в замкнутой форме совпадает с прямой суммой."""
    assert total_tuples(3) == 1
    assert total_tuples(4) == 4
    assert total_tuples(10) == 54
    direct = sum((n // 2) * (n // 2 + 1) // 2 for n in range(3, 2001))
    assert total_tuples(2000) == direct
    assert total_tuples(10**6) == 41_666_791_666_749_999


def test_tuple_counts_direct_small():
    """Тест: прямой перебор на N = 3, 4, 10."""
    assert tuple_counts_direct(3) == TupleCounts(N=3, a=1, b=1, c=1)
    counts = tuple_counts_direct(4)
    assert (counts.a, counts.c) == (4, 3)
    assert tuple_counts_direct(10).a == 54


def test_tuple_counts_direct_cap():
    """Тест: прямой путь ограничен потолком."""
    with pytest.raises(CensusError):
        tuple_counts_direct(101, cap=100)
    with pytest.raises(CensusError):
        tuple_counts_direct(2)


def test_fast_matches_direct_everywhere(small_sieve):
    """Тест: быстрый путь совпадает с прямым для всех N <= 2000."""
    direct = list(iter_tuple_counts_direct(2000))
    fast = tuple_counts_at(range(3, 2001), small_sieve)
    assert direct == fast


def test_fast_matches_direct_at_ten(small_sieve):
    """Тест: N = 10 даёт одинаковые TupleCounts обоими путями."""
    assert tuple_counts_fast(10, small_sieve) == tuple_counts_direct(10)


def test_tuple_counts_ordering(small_sieve):
    """Тест: B <= C <= A."""
    for counts in tuple_counts_at([100, 1000, 5000], small_sieve):
        assert counts.b <= counts.c <= counts.a


def test_tuple_ratio_at_hundred(small_sieve):
    """Тест: B/A при N = 100 в пределах 0.1 от предела 0.7876."""
    counts = tuple_counts_fast(100, small_sieve)
    assert abs(counts.b / counts.a - 0.7876) < 0.1


def test_tuple_counts_fast_out_of_sieve():
    """Тест: N за пределом решета отклоняется."""
    with pytest.raises(ValueError):
        tuple_counts_fast(101, build_sieve(100))


def test_per_n_parts_match_brute_force(small_sieve):
    """Тест: обе части вклада n в B и вклад в C совпадают с перебором пар."""
    for n in range(3, 120):
        m = n // 2
        pairs = [(j, k) for k in range(1, m + 1) for j in range(1, k + 1)]
        first = sum(1 for j, k in pairs if math.gcd(k, n) == 1)
        second = sum(1 for j, k in pairs if math.gcd(k, n) > 1 and math.gcd(j, n) == 1)
        connected = sum(1 for j, k in pairs if math.gcd(math.gcd(n, j), k) == 1)
        assert gpg_tuples_for(n, small_sieve) == (first, second), n
        assert connected_tuples_for(n, small_sieve) == connected, n


def test_connected_total_matches_per_n_sum(small_sieve):
    """Тест: C(N) через перестановку суммирования равна сумме вкладов по n."""
    running = 0
    for n in range(3, 600):
        running += connected_tuples_for(n, small_sieve)
        assert connected_total(n) == running


def test_coprime_count_and_sum(small_sieve):
    """Тест: формулы Мёбиуса совпадают с прямым перебором."""
    for n in (1, 12, 30, 97, 210):
        for m in (0, 1, 5, n // 2, n):
            coprime = [k for k in range(1, m + 1) if math.gcd(k, n) == 1]
            assert coprime_count(m, n, small_sieve) == len(coprime)
            assert coprime_sum(m, n, small_sieve) == sum(coprime)


def test_coprime_main_terms(small_sieve):
    """Тест: главный член mφ(n)/n и оценки остатков."""
    assert coprime_count_main_term(12, 12, small_sieve) == 4
    for n in range(1, 300):
        for m in range(0, n + 1, 7):
            assert coprime_error_bounds_hold(m, n, small_sieve), (m, n)


def test_census_arrays_match_records(small_sieve):
    """Тест: векторная перепись совпадает с поточечными формулами для n <= 3000."""
    arrays = census_arrays(3000, small_sieve)
    assert arrays.n.tolist() == list(range(3, 3001))
    for n, i_count, ic_count, p_count in zip(
        arrays.n.tolist(), arrays.i_count.tolist(), arrays.ic_count.tolist(), arrays.p_count.tolist()
    ):
        record = census_record(n, small_sieve)
        assert (i_count, ic_count, p_count) == (record.i_count, record.ic_count, record.p_count), n


def test_census_arrays_reject_bad_bounds(small_sieve):
    """Тест: max_n < 3 и граница за решетом отклоняются."""
    with pytest.raises(CensusError):
        census_arrays(2, small_sieve)
    with pytest.raises(ValueError):
        census_arrays(101, build_sieve(100))


def test_partial_sums_at_match_running_records(small_sieve):
    """Тест: точные префиксные суммы равны накопленным суммам поточечных строк."""
    checkpoints = [3, 10, 999, 1000, 2500]
    expected = {}
    ci = ci_c = cp = 0
    for n in range(3, 2501):
        record = census_record(n, small_sieve)
        ci, ci_c, cp = ci + record.i_count, ci_c + record.ic_count, cp + record.p_count
        if n in checkpoints:
            expected[n] = (ci, ci_c, cp)
    for sums in partial_sums_at(checkpoints, small_sieve):
        assert (sums.ci, sums.ci_c, sums.cp) == expected[sums.n]


def test_gpg_tuple_array_matches_per_n_parts(small_sieve):
    """Тест: вклад каждого n в B из свёртки равен сумме двух частей поточечной формулы."""
    per_n = gpg_tuple_array(3000, small_sieve)
    assert per_n.dtype == np.int64
    assert per_n[:3].tolist() == [0, 0, 0]
    for n in range(3, 3001):
        assert int(per_n[n]) == sum(gpg_tuples_for(n, small_sieve)), n


def test_gpg_tuple_array_rejects_small_bound(small_sieve):
    """Тест: N < 3 отклоняется."""
    with pytest.raises(CensusError):
        gpg_tuple_array(2, small_sieve)


def test_tuple_counts_at_match_per_n_sums(small_sieve):
    """Тест: B(N) быстрого пути равна сумме поточечных вкладов до 10⁴."""
    checkpoints = [3, 4, 100, 5000, 10_000]
    running = 0
    expected = {}
    for n in range(3, 10_001):
        running += sum(gpg_tuples_for(n, small_sieve))
        if n in checkpoints:
            expected[n] = running
    for counts in tuple_counts_at(checkpoints, small_sieve):
        assert counts.b == expected[counts.N]
        assert counts.a == total_tuples(counts.N)
