"""Число квадратных корней из 1 и из −1 по модулю n.

r(n) = #{x mod n : x² ≡ 1},  s(n) = #{x mod n : x² ≡ −1}.
Быстрый путь — кусочные формулы через ω(n); оракул — прямой перебор вычетов.
"""

import numpy as np

from igc_numtheory.sieve import FactorSieve, Factorization, NumberTheoryError, factorize

# Перебор вычетов доступен только для небольших модулей
DEFAULT_SCAN_LIMIT = 10_000


def count_sqrt_one_of(f: Factorization) -> int:
    """Число решений x² ≡ 1 (mod n) по разложению n."""
    n = f.value
    w = f.omega
    if n % 2 == 1:
        return 2**w
    if n % 4 == 2:
        return 2 ** (w - 1)
    if n % 8 == 4:
        return 2**w
    return 2 ** (w + 1)


def count_sqrt_minus_one_of(f: Factorization) -> int:
    """
    Число решений x² ≡ −1 (mod n) по разложению n.

    Ноль, если 4 | n или n делится на простое p ≡ 3 (mod 4);
    иначе 2 в степени числа нечётных простых делителей.
    """
    n = f.value
    if n % 4 == 0:
        return 0
    if any(p % 4 == 3 for p in f.primes):
        return 0
    odd_primes = sum(1 for p in f.primes if p % 2 == 1)
    return 2**odd_primes


def sqrt_one_local(p: int, k: int) -> int:
    """r(p^k): 2 для нечётного p; 1, 2, 4 для 2, 4 и 2^k с k >= 3."""
    if p != 2:
        return 2
    return min(2 ** (k - 1), 4)


def sqrt_minus_one_local(p: int, k: int) -> int:
    """s(p^k): 2 для p ≡ 1 (mod 4), 0 для p ≡ 3 (mod 4); 1 для 2 и 0 для 2^k с k >= 2."""
    if p == 2:
        return 1 if k == 1 else 0
    return 2 if p % 4 == 1 else 0


def count_sqrt_one(n: int, sieve: FactorSieve) -> int:
    """r(n): число квадратных корней из 1 по модулю n."""
    return count_sqrt_one_of(factorize(n, sieve))


def count_sqrt_minus_one(n: int, sieve: FactorSieve) -> int:
    """s(n): число квадратных корней из −1 по модулю n."""
    return count_sqrt_minus_one_of(factorize(n, sieve))


def _scan_squares(n: int, target: int, limit: int) -> int:
    """Считает x ∈ [0, n) с x² ≡ target (mod n) прямым перебором."""
    if not 1 <= n <= limit:
        raise NumberTheoryError(f"Перебор вычетов доступен для 1 <= n <= {limit}, получено n={n}")
    residues = np.arange(n, dtype=np.int64)
    return int(np.count_nonzero((residues * residues) % n == target % n))


def scan_sqrt_one(n: int, limit: int = DEFAULT_SCAN_LIMIT) -> int:
    """
    Оракул для r(n): прямой перебор всех вычетов.

    Args:
        n: Модуль
        limit: Максимальный допустимый модуль

    Returns:
        Число x ∈ [0, n) с x² ≡ 1 (mod n)

    Raises:
        NumberTheoryError: Если n вне [1, limit]
    """
    return _scan_squares(n, 1, limit)


def scan_sqrt_minus_one(n: int, limit: int = DEFAULT_SCAN_LIMIT) -> int:
    """Оракул для s(n): число x ∈ [0, n) с x² ≡ −1 (mod n)."""
    return _scan_squares(n, -1, limit)
