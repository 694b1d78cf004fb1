"""Числа кортежей (n, j, k) с 3 <= n <= N, 1 <= j <= k <= ⌊n/2⌋.

A(N) — все кортежи, B(N) — кортежи обобщённых графов Петерсена
(gcd(n, j) = 1 или gcd(n, k) = 1), C(N) — кортежи связных графов
(gcd(n, j, k) = 1). Прямой путь перебирает пары (j, k) и служит оракулом;
быстрый путь считает B свёрткой Дирихле по всем n сразу, а C через
перестановку суммирования по d. Поточечные формулы для одного n
остаются оракулом быстрого пути.
"""

import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from igc_core.logging import logger
from igc_numtheory import (
    FactorSieve,
    Factorization,
    dirichlet_convolution,
    exact_prefix_sums,
    factorize,
    mobius_table,
    squarefree_divisors,
    totient_of,
)

from igc_census.local_factors import CensusError

DEFAULT_DIRECT_PATH_CAP = 10_000


@dataclass(frozen=True, slots=True)
class TupleCounts:
    """A(N), B(N), C(N); всегда b <= c <= a."""

    N: int
    a: int
    b: int
    c: int


def _triangular(x: int) -> int:
    return x * (x + 1) // 2


def _tetrahedral(x: int) -> int:
    return x * (x + 1) * (x + 2) // 6


def _tuples_through(M: int) -> int:
    """Σ_{n=1..M} T(⌊n/2⌋): чётные и нечётные n дают по тетраэдральному числу."""
    if M < 1:
        return 0
    return _tetrahedral(M // 2) + _tetrahedral((M - 1) // 2)


def total_tuples(N: int) -> int:
    """A(N) в замкнутой форме (n = 1, 2 дают 0 и 1 кортеж, второй вычитается)."""
    if N < 3:
        raise CensusError(f"Требуется N >= 3, получено N={N}")
    return _tuples_through(N) - 1


def coprime_count_of(m: int, f: Factorization) -> int:
    """#{1 <= k <= m : gcd(k, n) = 1} = Σ_{d|n} μ(d)·⌊m/d⌋."""
    return sum(sign * (m // d) for d, sign in squarefree_divisors(f))


def coprime_sum_of(m: int, f: Factorization) -> int:
    """Σ{k : 1 <= k <= m, gcd(k, n) = 1} = Σ_{d|n} μ(d)·d·T(⌊m/d⌋)."""
    return sum(sign * d * _triangular(m // d) for d, sign in squarefree_divisors(f))


def coprime_count(m: int, n: int, sieve: FactorSieve) -> int:
    """Число k <= m, взаимно простых с n."""
    return coprime_count_of(m, factorize(n, sieve))


def coprime_sum(m: int, n: int, sieve: FactorSieve) -> int:
    """Сумма k <= m, взаимно простых с n."""
    return coprime_sum_of(m, factorize(n, sieve))


def coprime_count_main_term(m: int, n: int, sieve: FactorSieve) -> Fraction:
    """Главный член m·φ(n)/n."""
    return Fraction(m * totient_of(factorize(n, sieve)), n)


def coprime_sum_main_term(m: int, n: int, sieve: FactorSieve) -> Fraction:
    """Главный член m²·φ(n)/(2n)."""
    return Fraction(m * m * totient_of(factorize(n, sieve)), 2 * n)


def coprime_error_bounds_hold(m: int, n: int, sieve: FactorSieve) -> bool:
    """
    Проверяет остаточные члены обеих сумм.

    |count − mφ(n)/n| <= 2^ω(n) и |sum − m²φ(n)/(2n)| <= 2m·2^ω(n):
    каждый из 2^ω(n) членов Мёбиуса ошибается не более чем на 1 и на 2m.
    """
    f = factorize(n, sieve)
    terms = 2**f.omega
    count_error = abs(coprime_count_of(m, f) - coprime_count_main_term(m, n, sieve))
    sum_error = abs(coprime_sum_of(m, f) - coprime_sum_main_term(m, n, sieve))
    return count_error <= terms and sum_error <= 2 * m * terms


def gpg_tuples_for(n: int, sieve: FactorSieve) -> tuple[int, int]:
    """
    Кортежи обобщённых графов Петерсена с данным n, разбитые на две части.

    Первая часть — кортежи с gcd(k, n) = 1 (любое j <= k), вторая —
    gcd(k, n) > 1 и gcd(j, n) = 1.

    Returns:
        (B1, B2); их сумма — вклад n в B(N)
    """
    f = factorize(n, sieve)
    m = n // 2
    count = coprime_count_of(m, f)
    total = coprime_sum_of(m, f)
    # Σ_{k<=m} #{j <= k взаимно простых} = Σ_{j взаимно простых} (m − j + 1);
    # вклад взаимно простых k равен 1 + 2 + ... + count
    second = (m + 1) * count - total - _triangular(count)
    return total, second


def gpg_tuple_array(N: int, sieve: FactorSieve) -> np.ndarray:
    """
    Вклады B(n) всех n <= N одним массивом (нули при n < 3).

    Число c(n) взаимно простых с n шагов k <= ⌊n/2⌋ равно Σ_{d·t=n} μ(d)·⌊t/2⌋,
    поскольку ⌊⌊n/2⌋/d⌋ = ⌊t/2⌋; это свёртка Дирихле μ с ⌊t/2⌋. Из разбиения
    gpg_tuples_for сумма двух частей равна (m + 1)·c − T(c), где m = ⌊n/2⌋.

    Args:
        N: Верхняя граница, не меньше 3
        sieve: Решето, покрывающее N

    Returns:
        np.ndarray: int64-массив длины N + 1

    Raises:
        CensusError: Если N < 3
        SieveRangeError: Если N вне решета
    """
    if N < 3:
        raise CensusError(f"Требуется N >= 3, получено N={N}")
    sieve.check(N)
    half = np.arange(N + 1, dtype=np.int64) // 2
    count = dirichlet_convolution(mobius_table(N).astype(np.int64), half)
    per_n = (half + 1) * count - count * (count + 1) // 2
    per_n[:3] = 0
    return per_n


def connected_tuples_for(n: int, sieve: FactorSieve) -> int:
    """#{1 <= j <= k <= ⌊n/2⌋ : gcd(n, j, k) = 1} = Σ_{d|n} μ(d)·T(⌊n/2⌋/d)."""
    m = n // 2
    return sum(sign * _triangular(m // d) for d, sign in squarefree_divisors(factorize(n, sieve)))


def iter_tuple_counts_direct(
    N: int, cap: int = DEFAULT_DIRECT_PATH_CAP
) -> Iterator[TupleCounts]:
    """
    Накопленные A, B, C для n = 3..N прямым перебором пар (j, k).

    Пары j <= k берутся из нижнего треугольника; префикс длины T(m)
    треугольника размера ⌊N/2⌋ совпадает с треугольником размера m.

    Raises:
        CensusError: Если N < 3 или N > cap
    """
    if N < 3:
        raise CensusError(f"Требуется N >= 3, получено N={N}")
    if N > cap:
        raise CensusError(f"Прямой путь ограничен N <= {cap}, получено N={N}")

    rows, cols = np.tril_indices(N // 2)
    k_idx = rows.astype(np.int32)
    j_idx = cols.astype(np.int32)
    a = b = c = 0
    for n in range(3, N + 1):
        m = n // 2
        size = _triangular(m)
        steps = np.arange(1, m + 1, dtype=np.int64)
        g = np.gcd(n, steps)
        coprime = g == 1
        kk, jj = k_idx[:size], j_idx[:size]
        a += size
        b += int(np.count_nonzero(coprime[jj] | coprime[kk]))
        # gcd(n, j, k) = gcd(gcd(n, j), gcd(n, k))
        c += int(np.count_nonzero(np.gcd(g[jj], g[kk]) == 1))
        yield TupleCounts(N=n, a=a, b=b, c=c)


def tuple_counts_direct(N: int, cap: int = DEFAULT_DIRECT_PATH_CAP) -> TupleCounts:
    """
    A(N), B(N), C(N) прямым перебором; стоимость O(N³), только как оракул.

    Args:
        N: 3 <= N <= cap
        cap: Потолок прямого пути

    Returns:
        TupleCounts
    """
    counts = None
    for counts in iter_tuple_counts_direct(N, cap):
        pass
    return counts


def connected_total(N: int) -> int:
    """
    C(N) = Σ_{d<=N} μ(d)·H(⌊N/d⌋) − 1, где H(M) = Σ_{n<=M} T(⌊n/2⌋).

    Блоки d с одинаковым ⌊N/d⌋ суммируются через префиксные суммы μ.
    """
    if N < 3:
        raise CensusError(f"Требуется N >= 3, получено N={N}")
    mertens = np.cumsum(mobius_table(N), dtype=np.int64)
    total = 0
    d = 1
    while d <= N:
        q = N // d
        last = N // q
        block = int(mertens[last] - mertens[d - 1])
        if block:
            total += block * _tuples_through(q)
        d = last + 1
    # Единственный кортеж с d·n₁ < 3 и ненулевым вкладом: d = 1, n₁ = 2
    return total - 1


def tuple_counts_at(checkpoints: Iterable[int], sieve: FactorSieve) -> list[TupleCounts]:
    """
    A, B, C сразу для нескольких границ: B — точные префиксные суммы gpg_tuple_array.

    Args:
        checkpoints: Границы N (порядок и повторы не важны)
        sieve: Решето, покрывающее наибольшую границу

    Returns:
        Список TupleCounts по возрастанию N без повторов

    Raises:
        CensusError: Если граница меньше 3 или нарушен порядок b <= c <= a
        SieveRangeError: Если граница вне решета
    """
    wanted = sorted(set(checkpoints))
    if not wanted:
        return []
    if wanted[0] < 3:
        raise CensusError(f"Требуется N >= 3, получено N={wanted[0]}")
    sieve.check(wanted[-1])

    started = time.perf_counter()
    gpg_totals = exact_prefix_sums(gpg_tuple_array(wanted[-1], sieve), wanted)
    result: list[TupleCounts] = []
    for n, b in zip(wanted, gpg_totals):
        a = total_tuples(n)
        c = connected_total(n)
        if not b <= c <= a:
            raise CensusError(f"Нарушен порядок B <= C <= A при N={n}: {b}, {c}, {a}")
        result.append(TupleCounts(N=n, a=a, b=b, c=c))
        logger.debug(f"Кортежи до N={n}: A={a}, B={b}, C={c} ({time.perf_counter() - started:.2f} с)")
    return result


def tuple_counts_fast(N: int, sieve: FactorSieve) -> TupleCounts:
    """
    A(N), B(N), C(N) по точным формулам.

    Args:
        N: 3 <= N <= sieve.limit
        sieve: Решето

    Returns:
        TupleCounts, совпадающий с прямым путём

    Raises:
        CensusError: Если N < 3 или нарушен порядок b <= c <= a
        SieveRangeError: Если N вне решета
    """
    return tuple_counts_at([N], sieve)[0]
