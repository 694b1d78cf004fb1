"""Мультипликативные функции: φ, μ, ω, τ, J₂ и пси-функция Дедекинда.

Все вычисления ведутся в точных целых числах. Варианты с суффиксом ``_of``
принимают готовое разложение, остальные раскладывают n через решето.
"""

import math
from itertools import product

import numpy as np

from igc_numtheory.sieve import FactorSieve, Factorization, NumberTheoryError, factorize, primes_up_to


def totient_of(f: Factorization) -> int:
    """Функция Эйлера φ по разложению."""
    result = 1
    for p, k in f.pairs:
        result *= p ** (k - 1) * (p - 1)
    return result


def mobius_of(f: Factorization) -> int:
    """Функция Мёбиуса μ по разложению."""
    if any(k > 1 for _, k in f.pairs):
        return 0
    return -1 if f.omega % 2 else 1


def jordan2_of(f: Factorization) -> int:
    """
    Тотиент Жордана J₂(n) = n²·∏(1 − 1/p²).

    Для каждой p-части p^{2k}·(1 − 1/p²) = p^{2k−2}·(p² − 1), поэтому деление точное.
    """
    result = 1
    for p, k in f.pairs:
        result *= p ** (2 * k - 2) * (p * p - 1)
    return result


def dedekind_psi_of(f: Factorization) -> int:
    """
    Пси-функция Дедекинда ψ(n) = J₂(n)/φ(n) = n·∏(1 + 1/p).

    Raises:
        NumberTheoryError: Если деление J₂ на φ не точное
    """
    quotient, remainder = divmod(jordan2_of(f), totient_of(f))
    if remainder:
        raise NumberTheoryError(f"J2(n)/phi(n) не целое для n={f.value}")
    return quotient


def phi(n: int, sieve: FactorSieve) -> int:
    """Функция Эйлера φ(n)."""
    return totient_of(factorize(n, sieve))


def mu(n: int, sieve: FactorSieve) -> int:
    """Функция Мёбиуса μ(n) ∈ {−1, 0, 1}."""
    return mobius_of(factorize(n, sieve))


def omega(n: int, sieve: FactorSieve) -> int:
    """Число различных простых делителей ω(n)."""
    return factorize(n, sieve).omega


def tau(n: int, sieve: FactorSieve) -> int:
    """Число делителей τ(n)."""
    return factorize(n, sieve).tau


def jordan2(n: int, sieve: FactorSieve) -> int:
    """Тотиент Жордана J₂(n)."""
    return jordan2_of(factorize(n, sieve))


def dedekind_psi(n: int, sieve: FactorSieve) -> int:
    """Пси-функция Дедекинда ψ(n)."""
    return dedekind_psi_of(factorize(n, sieve))


def divisors(n: int, sieve: FactorSieve) -> list[int]:
    """
    Все делители n по возрастанию.

    Args:
        n: Число в диапазоне решета
        sieve: Решето

    Returns:
        Отсортированный список делителей
    """
    f = factorize(n, sieve)
    result = [1]
    for p, k in f.pairs:
        result = [d * p**e for d in result for e in range(k + 1)]
    return sorted(result)


def squarefree_divisors(f: Factorization) -> list[tuple[int, int]]:
    """
    Бесквадратные делители d | n вместе с μ(d).

    Только они дают ненулевой вклад в суммы вида Σ_{d|n} μ(d)·F(d).

    Args:
        f: Разложение n

    Returns:
        Список пар (d, μ(d)); всего 2^ω(n) пар
    """
    result = []
    for mask in product((0, 1), repeat=f.omega):
        d = 1
        for take, p in zip(mask, f.primes):
            if take:
                d *= p
        result.append((d, -1 if sum(mask) % 2 else 1))
    return result


def gcd(a: int, b: int) -> int:
    """Наибольший общий делитель."""
    return math.gcd(a, b)


def gcd3(a: int, b: int, c: int) -> int:
    """НОД трёх чисел: gcd(gcd(a, b), c)."""
    return math.gcd(math.gcd(a, b), c)


def mobius_table(limit: int) -> np.ndarray:
    """
    Значения μ(d) для всех 0 <= d <= limit одним проходом по простым.

    Args:
        limit: Верхняя граница (включительно)

    Returns:
        np.ndarray: int8-массив, mu[d] = μ(d); mu[0] = 0
    """
    mu_values = np.ones(limit + 1, dtype=np.int8)
    mu_values[0] = 0
    for p in primes_up_to(limit):
        p = int(p)
        mu_values[p::p] *= -1
        if p * p <= limit:
            mu_values[p * p :: p * p] = 0
    return mu_values
