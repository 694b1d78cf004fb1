"""Точные числа классов изоморфизма I(n), I_c(n), P(n) и их частичные суммы.

Все три формулы дают «четверть суммы» минус поправку; деление на 4 обязано
быть точным, иначе поднимается IntegralityError. Классы считаются
в строгом соглашении k <= (n − 1)/2.
"""

import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from igc_core.logging import logger
from igc_numtheory import (
    FactorSieve,
    Factorization,
    count_sqrt_minus_one_of,
    count_sqrt_one_of,
    dedekind_psi_of,
    dedekind_psi_table,
    exact_prefix_sums,
    factorize,
    multiplicative_table,
    sqrt_minus_one_table,
    sqrt_one_table,
    tau_table,
    totient_of,
    totient_table,
    two_omega_table,
)

from igc_census.local_factors import LOCAL_FACTORS, CensusError, g_multiplicative_of

# Наименьшее n, для которого определены кортежи (n, j, k)
MIN_N = 3


class IntegralityError(CensusError):
    """Четверть суммы оказалась нецелой или отрицательной."""

    pass


@dataclass(frozen=True, slots=True)
class CensusRecord:
    """Числа классов для одного n."""

    n: int
    i_count: int
    ic_count: int
    p_count: int


@dataclass(frozen=True, slots=True)
class PartialSums:
    """Накопленные суммы CI, CI_c, CP от n = 3 до n включительно."""

    n: int
    ci: int
    ci_c: int
    cp: int


def _check_n(n: int) -> None:
    if n < MIN_N:
        raise CensusError(f"Требуется n >= {MIN_N}, получено n={n}")


def _exact_quarter(total: int, correction: int, what: str, n: int) -> int:
    quotient, remainder = divmod(total, 4)
    if remainder:
        raise IntegralityError(f"{what}({n}): сумма {total} не делится на 4")
    result = quotient - correction
    if result < 0:
        raise IntegralityError(f"{what}({n}) = {result} < 0")
    return result


def count_I_of(f: Factorization) -> int:
    """
    Число классов изоморфизма I-графов с данным n.

    I(n) = ¼·Σ_{i=1..4} g_i(n) − поправка, где поправка равна 2τ(n) − 1
    для чётного n и τ(n) для нечётного.
    """
    n = f.value
    _check_n(n)
    total = sum(g_multiplicative_of(i, f) for i in (1, 2, 3, 4))
    correction = 2 * f.tau - 1 if n % 2 == 0 else f.tau
    return _exact_quarter(total, correction, "I", n)


def _t_term(f: Factorization) -> int:
    n = f.value
    if n % 2:
        return 2**f.omega
    # ω(n/2) теряет двойку только при n ≡ 2 (mod 4)
    omega_half = f.omega - 1 if n % 4 == 2 else f.omega
    return 2**f.omega + 2**omega_half


def _ic_correction(n: int) -> int:
    if n % 2:
        return 1
    return 2 if n % 4 == 0 else 3


def count_Ic_of(f: Factorization) -> int:
    """Число классов связных I-графов: ¼(ψ(n) + r(n) + s(n) + t(n)) − поправка 1/2/3."""
    n = f.value
    _check_n(n)
    total = dedekind_psi_of(f) + count_sqrt_one_of(f) + count_sqrt_minus_one_of(f) + _t_term(f)
    return _exact_quarter(total, _ic_correction(n), "I_c", n)


def count_P_of(f: Factorization) -> int:
    """Число классов обобщённых графов Петерсена: ¼(2n − φ(n) − 2·gcd(n, 2) + r(n) + s(n))."""
    n = f.value
    _check_n(n)
    total = 2 * n - totient_of(f) - 2 * (2 if n % 2 == 0 else 1) + count_sqrt_one_of(f) + count_sqrt_minus_one_of(f)
    return _exact_quarter(total, 0, "P", n)


def count_I(n: int, sieve: FactorSieve) -> int:
    """I(n) для 3 <= n <= sieve.limit."""
    _check_n(n)
    return count_I_of(factorize(n, sieve))


def count_Ic(n: int, sieve: FactorSieve) -> int:
    """I_c(n) для 3 <= n <= sieve.limit."""
    _check_n(n)
    return count_Ic_of(factorize(n, sieve))


def count_P(n: int, sieve: FactorSieve) -> int:
    """P(n) для 3 <= n <= sieve.limit."""
    _check_n(n)
    return count_P_of(factorize(n, sieve))


def census_record(n: int, sieve: FactorSieve) -> CensusRecord:
    """
    Все три числа классов по одному разложению n.

    Args:
        n: 3 <= n <= sieve.limit
        sieve: Решето

    Returns:
        CensusRecord

    Raises:
        CensusError: Если n < 3
        SieveRangeError: Если n вне решета
        IntegralityError: Если нарушена целочисленность или порядок P <= I, I_c <= I
    """
    _check_n(n)
    f = factorize(n, sieve)
    record = CensusRecord(n=n, i_count=count_I_of(f), ic_count=count_Ic_of(f), p_count=count_P_of(f))
    if record.ic_count > record.i_count or record.p_count > record.i_count:
        raise IntegralityError(f"Нарушен порядок счётчиков для n={n}: {record}")
    return record


@dataclass(frozen=True)
class CensusArrays:
    """I(n), I_c(n), P(n) для n = 3..max_n; элемент i соответствует n = i + 3."""

    n: np.ndarray = field(repr=False)
    i_count: np.ndarray = field(repr=False)
    ic_count: np.ndarray = field(repr=False)
    p_count: np.ndarray = field(repr=False)


def _exact_quarter_array(total: np.ndarray, correction: np.ndarray, what: str, n: np.ndarray) -> np.ndarray:
    bad = np.flatnonzero(total % 4)
    if bad.size:
        first = bad[0]
        raise IntegralityError(f"{what}({int(n[first])}): сумма {int(total[first])} не делится на 4")
    result = total // 4 - correction
    negative = np.flatnonzero(result < 0)
    if negative.size:
        first = negative[0]
        raise IntegralityError(f"{what}({int(n[first])}) = {int(result[first])} < 0")
    return result


def census_arrays(max_n: int, sieve: FactorSieve) -> CensusArrays:
    """
    Все три числа классов сразу для n = 3..max_n.

    Каждое слагаемое формул (g₁..g₄, τ, φ, ψ, r, s, 2^ω) мультипликативно
    и строится одной таблицей; t(n) получается из 2^ω по чётности n.

    Args:
        max_n: Наибольшее n, не меньше 3
        sieve: Решето, покрывающее max_n

    Returns:
        CensusArrays

    Raises:
        CensusError: Если max_n < 3
        SieveRangeError: Если max_n вне решета
        IntegralityError: Если нарушена целочисленность или порядок P <= I, I_c <= I
    """
    if max_n < MIN_N:
        raise CensusError(f"Требуется max_n >= {MIN_N}, получено {max_n}")
    sieve.check(max_n)
    started = time.perf_counter()

    n = np.arange(MIN_N, max_n + 1, dtype=np.int64)
    even = n % 2 == 0
    tau = tau_table(max_n, sieve)[MIN_N:]
    roots = sqrt_one_table(max_n, sieve)[MIN_N:] + sqrt_minus_one_table(max_n, sieve)[MIN_N:]
    two_omega = two_omega_table(max_n, sieve)[MIN_N:]

    g_total = sum(multiplicative_table(LOCAL_FACTORS[i], max_n, sieve)[MIN_N:] for i in (1, 2, 3, 4))
    i_count = _exact_quarter_array(g_total, np.where(even, 2 * tau - 1, tau), "I", n)

    # ω(n/2) теряет двойку только при n ≡ 2 (mod 4)
    t_term = two_omega + np.where(even, np.where(n % 4 == 2, two_omega // 2, two_omega), 0)
    ic_total = dedekind_psi_table(max_n, sieve)[MIN_N:] + roots + t_term
    ic_count = _exact_quarter_array(ic_total, np.where(even, np.where(n % 4 == 0, 2, 3), 1), "I_c", n)

    p_total = 2 * n - totient_table(max_n, sieve)[MIN_N:] - 2 * np.where(even, 2, 1) + roots
    p_count = _exact_quarter_array(p_total, np.zeros_like(n), "P", n)

    disordered = np.flatnonzero((ic_count > i_count) | (p_count > i_count))
    if disordered.size:
        first = disordered[0]
        raise IntegralityError(
            f"Нарушен порядок счётчиков для n={int(n[first])}: "
            f"I={int(i_count[first])}, I_c={int(ic_count[first])}, P={int(p_count[first])}"
        )
    logger.debug(f"Перепись до n={max_n} построена за {time.perf_counter() - started:.2f} с")
    return CensusArrays(n=n, i_count=i_count, ic_count=ic_count, p_count=p_count)


def iter_census(max_n: int, sieve: FactorSieve) -> Iterator[tuple[CensusRecord, PartialSums]]:
    """
    Поток строк переписи для n = 3..max_n с накопленными суммами.

    Yields:
        (CensusRecord, PartialSums) по возрастанию n
    """
    arrays = census_arrays(max_n, sieve)
    columns = (arrays.n, arrays.i_count, arrays.ic_count, arrays.p_count)
    running = (np.cumsum(arrays.i_count), np.cumsum(arrays.ic_count), np.cumsum(arrays.p_count))
    for n, i_count, ic_count, p_count, ci, ci_c, cp in zip(*(c.tolist() for c in columns + running)):
        yield (
            CensusRecord(n=n, i_count=i_count, ic_count=ic_count, p_count=p_count),
            PartialSums(n=n, ci=ci, ci_c=ci_c, cp=cp),
        )


def partial_sums(N: int, sieve: FactorSieve) -> PartialSums:
    """
    CI(N), CI_c(N), CP(N): суммы от n = 3 до N в точных целых.

    Raises:
        CensusError: Если N < 3
        SieveRangeError: Если N вне решета
    """
    return partial_sums_at([N], sieve)[0]


def partial_sums_at(checkpoints: Iterable[int], sieve: FactorSieve) -> list[PartialSums]:
    """
    Частичные суммы сразу для нескольких границ по одной переписи.

    Args:
        checkpoints: Границы N (порядок и повторы не важны)
        sieve: Решето, покрывающее наибольшую границу

    Returns:
        Список PartialSums по возрастанию N без повторов
    """
    wanted = sorted(set(checkpoints))
    if not wanted:
        return []
    if wanted[0] < MIN_N:
        raise CensusError(f"Все границы должны быть >= {MIN_N}, получено {wanted[0]}")

    arrays = census_arrays(wanted[-1], sieve)
    positions = [N - MIN_N for N in wanted]
    columns = [exact_prefix_sums(values, positions) for values in (arrays.i_count, arrays.ic_count, arrays.p_count)]
    result = [PartialSums(n=N, ci=ci, ci_c=ci_c, cp=cp) for N, ci, ci_c, cp in zip(wanted, *columns)]
    for sums in result:
        logger.debug(f"CI({sums.n})={sums.ci}, CI_c={sums.ci_c}, CP={sums.cp}")
    return result
