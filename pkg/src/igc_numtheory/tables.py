"""Таблицы арифметических функций сразу для всех n <= limit.

Мультипликативная функция задаётся значениями на степенях простых и
заполняется срезами numpy по кратным каждого простого. Значения хранятся
в int64 и остаются точными; накопленные суммы переводятся в целые Python.
"""

from collections.abc import Callable, Sequence
from math import isqrt

import numpy as np

from igc_numtheory.roots import sqrt_minus_one_local, sqrt_one_local
from igc_numtheory.sieve import FactorSieve, NumberTheoryError

PrimePowerValue = Callable[[int, int], int]

# Запас до переполнения int64 при суммировании блока
_INT64_HEADROOM = 2**62


def sieve_primes(limit: int, sieve: FactorSieve) -> np.ndarray:
    """Простые p <= limit, прочитанные из таблицы наименьших простых делителей."""
    sieve.check(limit)
    candidates = np.arange(2, limit + 1, dtype=np.int64)
    return candidates[sieve.spf[2 : limit + 1] == candidates]


def multiplicative_table(local: PrimePowerValue, limit: int, sieve: FactorSieve) -> np.ndarray:
    """
    Значения мультипликативной функции f(n) для 0 <= n <= limit.

    Для простого p показатель p в каждом кратном p набирается шагами по
    p², p³, ...; затем весь срез кратных умножается на local(p, показатель).
    Простые с p² > limit входят в первой степени, и срез умножается на число.

    Args:
        local: f(p^k) как функция (p, k)
        limit: Верхняя граница (включительно)
        sieve: Решето, покрывающее limit

    Returns:
        np.ndarray: int64-массив, values[n] = f(n); values[0] = 0, values[1] = 1

    Raises:
        SieveRangeError: Если limit вне решета
    """
    values = np.ones(limit + 1, dtype=np.int64)
    values[0] = 0
    for p in sieve_primes(limit, sieve).tolist():
        if p * p > limit:
            values[p::p] *= local(p, 1)
            continue
        # exponents[i]: показатель p в числе (i + 1)·p
        exponents = np.ones(limit // p, dtype=np.int64)
        q = p
        while q * p <= limit:
            exponents[q - 1 :: q] += 1
            q *= p
        by_exponent = np.array([0] + [local(p, k) for k in range(1, int(exponents.max()) + 1)], dtype=np.int64)
        values[p::p] *= by_exponent[exponents]
    return values


def _totient_local(p: int, k: int) -> int:
    return p ** (k - 1) * (p - 1)


def _psi_local(p: int, k: int) -> int:
    return p ** (k - 1) * (p + 1)


def totient_table(limit: int, sieve: FactorSieve) -> np.ndarray:
    """φ(n) для 0 <= n <= limit."""
    return multiplicative_table(_totient_local, limit, sieve)


def dedekind_psi_table(limit: int, sieve: FactorSieve) -> np.ndarray:
    """ψ(n) = n·∏(1 + 1/p) для 0 <= n <= limit."""
    return multiplicative_table(_psi_local, limit, sieve)


def tau_table(limit: int, sieve: FactorSieve) -> np.ndarray:
    """τ(n) для 0 <= n <= limit."""
    return multiplicative_table(lambda p, k: k + 1, limit, sieve)


def two_omega_table(limit: int, sieve: FactorSieve) -> np.ndarray:
    """2^ω(n) — число бесквадратных делителей n."""
    return multiplicative_table(lambda p, k: 2, limit, sieve)


def sqrt_one_table(limit: int, sieve: FactorSieve) -> np.ndarray:
    """r(n) для 0 <= n <= limit."""
    return multiplicative_table(sqrt_one_local, limit, sieve)


def sqrt_minus_one_table(limit: int, sieve: FactorSieve) -> np.ndarray:
    """s(n) для 0 <= n <= limit."""
    return multiplicative_table(sqrt_minus_one_local, limit, sieve)


def dirichlet_convolution(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """
    (f ∗ g)(n) = Σ_{d·t = n} f(d)·g(t) для 1 <= n <= N.

    Пары (d, t) делятся по гиперболе: при d <= √N срез кратных d получает
    f(d)·g(1..N/d), остальные пары имеют t < √N и набираются срезом по d.
    Всего около 2√N векторных операций.

    Args:
        f: int64-массив длины N + 1 (индекс 0 не используется)
        g: int64-массив той же длины

    Returns:
        np.ndarray: int64-массив длины N + 1, элемент 0 равен 0

    Raises:
        NumberTheoryError: Если длины массивов различаются
    """
    if len(f) != len(g):
        raise NumberTheoryError(f"Длины массивов различаются: {len(f)} и {len(g)}")
    N = len(f) - 1
    out = np.zeros(N + 1, dtype=np.int64)
    if N < 1:
        return out
    K = isqrt(N)
    for d in range(1, K + 1):
        if f[d]:
            out[d::d] += f[d] * g[1 : N // d + 1]
    for t in range(1, N // (K + 1) + 1):
        if g[t]:
            hi = N // t
            out[t * (K + 1) : t * hi + 1 : t] += g[t] * f[K + 1 : hi + 1]
    return out


def exact_prefix_sums(values: np.ndarray, positions: Sequence[int]) -> list[int]:
    """
    Σ values[0..pos] для каждой позиции в точных целых Python.

    Суммирование идёт блоками, в которых сумма int64 не переполняется.

    Args:
        values: int64-массив
        positions: Индексы по неубыванию

    Returns:
        Список сумм в порядке positions
    """
    largest = int(np.abs(values).max(initial=0))
    block = max(1, _INT64_HEADROOM // max(largest, 1))
    sums: list[int] = []
    total = 0
    start = 0
    for pos in positions:
        for lo in range(start, pos + 1, block):
            total += int(values[lo : min(lo + block, pos + 1)].sum())
        start = max(start, pos + 1)
        sums.append(total)
    return sums
