"""Решето наименьших простых делителей и разложение на множители."""

from dataclasses import dataclass, field
from math import isqrt

import numpy as np
import psutil

from igc_core.logging import logger

# Бюджет памяти по умолчанию для таблицы spf (в мегабайтах)
DEFAULT_MEMORY_BUDGET_MB = 512

# int32 хватает для limit < 2**31
_SPF_DTYPE = np.int32
_BYTES_PER_ENTRY = np.dtype(_SPF_DTYPE).itemsize


class NumberTheoryError(ValueError):
    """Базовое исключение для ошибок теоретико-числового модуля."""

    pass


class SieveRangeError(NumberTheoryError):
    """Аргумент вне диапазона решета."""

    pass


class SieveBudgetError(NumberTheoryError):
    """Решето не помещается в бюджет памяти."""

    pass


@dataclass(frozen=True)
class FactorSieve:
    """Таблица наименьших простых делителей для 2..limit."""

    limit: int
    spf: np.ndarray = field(repr=False)

    def check(self, n: int) -> None:
        """
        Проверяет, что n можно разложить через решето.

        Raises:
            SieveRangeError: Если n вне [1, limit]
        """
        if not 1 <= n <= self.limit:
            raise SieveRangeError(f"n={n} вне диапазона решета [1, {self.limit}]")

    def is_prime(self, n: int) -> bool:
        """Проверка простоты для 2 <= n <= limit."""
        return n >= 2 and n <= self.limit and int(self.spf[n]) == n


@dataclass(frozen=True, slots=True)
class Factorization:
    """Каноническое разложение: пары (простое, показатель) по возрастанию простых."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        """Восстановленное число."""
        result = 1
        for p, k in self.pairs:
            result *= p**k
        return result

    @property
    def primes(self) -> tuple[int, ...]:
        """Различные простые делители."""
        return tuple(p for p, _ in self.pairs)

    @property
    def omega(self) -> int:
        """Число различных простых делителей."""
        return len(self.pairs)

    @property
    def tau(self) -> int:
        """Число делителей."""
        result = 1
        for _, k in self.pairs:
            result *= k + 1
        return result


def sieve_memory_estimate_mb(limit: int) -> float:
    """Объём таблицы spf до limit в мегабайтах."""
    return (limit + 1) * _BYTES_PER_ENTRY / 2**20


def build_sieve(limit: int, memory_budget_mb: int = DEFAULT_MEMORY_BUDGET_MB) -> FactorSieve:
    """
    Строит таблицу наименьших простых делителей для всех n <= limit.

    Args:
        limit: Верхняя граница (включительно), не меньше 2
        memory_budget_mb: Допустимый объём таблицы в мегабайтах

    Returns:
        FactorSieve: Неизменяемое решето

    Raises:
        SieveRangeError: Если limit < 2 или не помещается в int32
        SieveBudgetError: Если таблица превышает бюджет памяти
    """
    if limit < 2:
        raise SieveRangeError(f"Предел решета должен быть не меньше 2, получено {limit}")
    if limit >= np.iinfo(_SPF_DTYPE).max:
        raise SieveRangeError(f"Предел решета {limit} не помещается в {np.dtype(_SPF_DTYPE).name}")

    required_bytes = (limit + 1) * _BYTES_PER_ENTRY
    budget_bytes = memory_budget_mb * 1024 * 1024
    if required_bytes > budget_bytes:
        raise SieveBudgetError(
            f"Решето до {limit} требует {required_bytes / 2**20:.1f} МБ "
            f"при бюджете {memory_budget_mb} МБ"
        )

    available = psutil.virtual_memory().available
    if required_bytes > available // 2:
        logger.warning(
            f"Решето займёт {required_bytes / 2**20:.1f} МБ, "
            f"свободно только {available / 2**20:.1f} МБ"
        )

    spf = np.zeros(limit + 1, dtype=_SPF_DTYPE)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            # Срез является представлением: запись идёт в исходный массив
            block = spf[p * p :: p]
            block[block == 0] = p

    # Оставшиеся нули: простые числа, а также 0 и 1
    untouched = np.nonzero(spf == 0)[0]
    spf[untouched] = untouched
    spf.flags.writeable = False

    logger.debug(f"Решето построено: limit={limit}, {required_bytes / 2**20:.1f} МБ")
    return FactorSieve(limit=limit, spf=spf)


def factorize(n: int, sieve: FactorSieve) -> Factorization:
    """
    Раскладывает n на простые множители за O(log n) через таблицу spf.

    Args:
        n: Число в диапазоне [1, sieve.limit]
        sieve: Решето

    Returns:
        Factorization: Разложение (пустое для n = 1)

    Raises:
        SieveRangeError: Если n вне диапазона решета
    """
    sieve.check(n)
    spf = sieve.spf
    pairs: list[tuple[int, int]] = []
    while n > 1:
        p = int(spf[n])
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        pairs.append((p, k))
    return Factorization(tuple(pairs))


def primes_up_to(limit: int) -> np.ndarray:
    """
    Возвращает массив простых чисел, не превосходящих limit (решето Эратосфена).

    Args:
        limit: Верхняя граница (включительно)

    Returns:
        np.ndarray: Простые числа по возрастанию (int64)
    """
    if limit < 2:
        return np.array([], dtype=np.int64)

    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.nonzero(is_prime)[0].astype(np.int64)
