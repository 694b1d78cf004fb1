"""Локальные множители g₁..g₄ на степенях простых и их мультипликативные продолжения.

Среднее четырёх продолжений даёт главную часть числа классов I(n);
g_upper(p^k) = (k + 1)² мажорирует g₂, g₃, g₄ и совпадает с τ(p^k)².
"""

from collections.abc import Callable
from functools import lru_cache
from typing import Union

from sympy import isprime

from igc_numtheory import FactorSieve, Factorization, factorize


class CensusError(ValueError):
    """Базовое исключение для ошибок модуля подсчёта."""

    pass


@lru_cache(maxsize=1 << 16)
def _is_prime(p: int) -> bool:
    return bool(isprime(p))


def _check_prime_power(p: int, k: int) -> None:
    if not _is_prime(p):
        raise CensusError(f"Локальный множитель определён только для простых p, получено p={p}")
    if k < 1:
        raise CensusError(f"Показатель должен быть не меньше 1, получено k={k}")


def g1(p: int, k: int) -> int:
    """g₁(p^k) = ((p + 1)·p^k − 2)/(p − 1); деление всегда точное."""
    _check_prime_power(p, k)
    quotient, remainder = divmod((p + 1) * p**k - 2, p - 1)
    if remainder:
        raise CensusError(f"g1({p}^{k}) не целое")
    return quotient


def g2(p: int, k: int) -> int:
    """g₂(p^k) = 4k при p = 2, иначе 2k + 1."""
    _check_prime_power(p, k)
    if p == 2:
        return 4 * k
    return 2 * k + 1


def g3(p: int, k: int) -> int:
    """g₃(p^k) = 2 при 2¹, 4(k − 1) при 2^k с k >= 2, иначе 2k + 1."""
    _check_prime_power(p, k)
    if p == 2:
        return 2 if k == 1 else 4 * (k - 1)
    return 2 * k + 1


def g4(p: int, k: int) -> int:
    """g₄(p^k) = 2 при p = 2, 2k + 1 при p ≡ 1 (mod 4), 1 при p ≡ 3 (mod 4)."""
    _check_prime_power(p, k)
    if p == 2:
        return 2
    if p % 4 == 1:
        return 2 * k + 1
    return 1


def g_upper(p: int, k: int) -> int:
    """Мажоранта (k + 1)²."""
    _check_prime_power(p, k)
    return (k + 1) ** 2


LocalFactor = Callable[[int, int], int]
FactorIndex = Union[int, str]

LOCAL_FACTORS: dict[FactorIndex, LocalFactor] = {
    1: g1,
    2: g2,
    3: g3,
    4: g4,
    "u": g_upper,
}


def g_multiplicative_of(index: FactorIndex, f: Factorization) -> int:
    """
    Мультипликативное продолжение локального множителя по разложению.

    Args:
        index: 1, 2, 3, 4 или "u"
        f: Разложение n

    Returns:
        Произведение локальных множителей по всем p^k || n (1 при n = 1)

    Raises:
        CensusError: Если индекс неизвестен
    """
    try:
        factor = LOCAL_FACTORS[index]
    except KeyError:
        raise CensusError(f"Неизвестный локальный множитель: {index!r}") from None
    result = 1
    for p, k in f.pairs:
        result *= factor(p, k)
    return result


def g_multiplicative(index: FactorIndex, n: int, sieve: FactorSieve) -> int:
    """g_i(n) для n в диапазоне решета."""
    return g_multiplicative_of(index, factorize(n, sieve))
