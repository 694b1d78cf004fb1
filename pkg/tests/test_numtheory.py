"""Тесты для теоретико-числового модуля."""

import math
import random

import numpy as np
import pytest
import sympy

from igc_numtheory import (
    NumberTheoryError,
    SieveBudgetError,
    SieveRangeError,
    build_sieve,
    count_sqrt_minus_one,
    count_sqrt_one,
    dedekind_psi,
    dedekind_psi_table,
    dirichlet_convolution,
    divisors,
    exact_prefix_sums,
    factorize,
    gcd3,
    jordan2,
    mobius_table,
    mu,
    omega,
    phi,
    primes_up_to,
    scan_sqrt_minus_one,
    scan_sqrt_one,
    sieve_memory_estimate_mb,
    sqrt_minus_one_table,
    sqrt_one_table,
    squarefree_divisors,
    tau,
    tau_table,
    totient_table,
    two_omega_table,
)


def test_build_sieve_rejects_small_limit():
    """Тест: решето до 1 не строится."""
    with pytest.raises(SieveRangeError):
        build_sieve(1)


def test_build_sieve_respects_memory_budget():
    """Тест: решето, не влезающее в бюджет памяти, отклоняется."""
    with pytest.raises(SieveBudgetError):
        build_sieve(10_000_000, memory_budget_mb=1)


def test_sieve_marks_primes(small_sieve):
    """Тест: spf[p] == p ровно для простых p."""
    primes = [n for n in range(2, 200) if small_sieve.is_prime(n)]
    assert primes == list(sympy.primerange(2, 200))
    assert list(primes_up_to(200)) == primes


def test_factorize_matches_sympy(small_sieve):
    """Тест: разложение совпадает с sympy.factorint."""
    for n in (1, 2, 12, 360, 997, 1024, 9999, 10_000):
        f = factorize(n, small_sieve)
        assert dict(f.pairs) == sympy.factorint(n)
        assert f.value == n


def test_factorize_out_of_range(small_sieve):
    """Тест: число за пределом решета вызывает ошибку диапазона."""
    with pytest.raises(SieveRangeError):
        factorize(10_001, small_sieve)
    with pytest.raises(SieveRangeError):
        factorize(0, small_sieve)


@pytest.mark.parametrize(
    "n, expected_phi, expected_mu, expected_omega, expected_tau",
    [
        (1, 1, 1, 0, 1),
        (2, 1, -1, 1, 2),
        (12, 4, 0, 2, 6),
        (30, 8, -1, 3, 8),
        (97, 96, -1, 1, 2),
    ],
)
def test_multiplicative_functions(small_sieve, n, expected_phi, expected_mu, expected_omega, expected_tau):
    """Тест: значения φ, μ, ω, τ на известных числах."""
    assert phi(n, small_sieve) == expected_phi
    assert mu(n, small_sieve) == expected_mu
    assert omega(n, small_sieve) == expected_omega
    assert tau(n, small_sieve) == expected_tau


def test_functions_agree_with_sympy(small_sieve):
    """Тест: φ, μ, τ совпадают с sympy на всём диапазоне до 2000."""
    for n in range(1, 2001):
        assert phi(n, small_sieve) == sympy.totient(n)
        assert mu(n, small_sieve) == sympy.mobius(n)
        assert tau(n, small_sieve) == sympy.divisor_count(n)


def test_jordan_and_psi(small_sieve):
    """Тест: J₂(n) = φ(n)·ψ(n) и ψ(n) = n·∏(1 + 1/p)."""
    assert jordan2(6, small_sieve) == 24
    assert dedekind_psi(6, small_sieve) == 12
    assert dedekind_psi(3, small_sieve) == 4
    for n in range(1, 1001):
        psi = dedekind_psi(n, small_sieve)
        assert jordan2(n, small_sieve) == phi(n, small_sieve) * psi
        expected = n
        for p in sympy.primefactors(n):
            expected = expected * (p + 1) // p
        assert psi == expected


def test_multiplicativity_full_grid(small_sieve):
    """Тест: f(ab) = f(a)f(b) для взаимно простых a, b <= 100."""
    for a in range(1, 101):
        for b in range(1, 101):
            if math.gcd(a, b) != 1:
                continue
            for f in (phi, mu, tau, jordan2, dedekind_psi):
                assert f(a * b, small_sieve) == f(a, small_sieve) * f(b, small_sieve)


def test_multiplicativity_random_sample(small_sieve):
    """Тест: мультипликативность на случайной выборке пар до 10³."""
    rng = random.Random(20240601)
    checked = 0
    while checked < 500:
        a, b = rng.randint(1, 1000), rng.randint(1, 10)
        if math.gcd(a, b) != 1:
            continue
        checked += 1
        assert phi(a * b, small_sieve) == phi(a, small_sieve) * phi(b, small_sieve)
        assert dedekind_psi(a * b, small_sieve) == dedekind_psi(a, small_sieve) * dedekind_psi(b, small_sieve)


def test_mobius_sums_to_zero_over_divisors(small_sieve):
    """Тест: Σ_{d|n} μ(d) = 0 для n > 1."""
    for n in range(2, 500):
        assert sum(mu(d, small_sieve) for d in divisors(n, small_sieve)) == 0


def test_squarefree_divisors(small_sieve):
    """Тест: бесквадратные делители 12: 1, 2, 3, 6 со знаками μ."""
    pairs = sorted(squarefree_divisors(factorize(12, small_sieve)))
    assert pairs == [(1, 1), (2, -1), (3, -1), (6, 1)]
    assert squarefree_divisors(factorize(1, small_sieve)) == [(1, 1)]


def test_divisors_sorted(small_sieve):
    """Тест: делители возвращаются по возрастанию."""
    assert divisors(36, small_sieve) == [1, 2, 3, 4, 6, 9, 12, 18, 36]


def test_mobius_table_matches_pointwise(small_sieve):
    """Тест: таблица μ совпадает с поточечным вычислением."""
    table = mobius_table(3000)
    assert table[0] == 0
    assert all(int(table[n]) == mu(n, small_sieve) for n in range(1, 3001))


def test_gcd3():
    """Тест: НОД трёх чисел."""
    assert gcd3(6, 2, 2) == 2
    assert gcd3(10, 1, 3) == 1
    assert gcd3(12, 8, 6) == 2


@pytest.mark.parametrize(
    "n, r, s",
    [(1, 1, 1), (2, 1, 1), (4, 2, 0), (5, 2, 2), (8, 4, 0), (15, 4, 0), (24, 8, 0), (65, 4, 4)],
)
def test_root_counts_known_values(small_sieve, n, r, s):
    """Тест: r(n) и s(n) на известных модулях."""
    assert count_sqrt_one(n, small_sieve) == r
    assert count_sqrt_minus_one(n, small_sieve) == s


def test_root_counts_match_scan(small_sieve):
    """Тест: кусочные формулы r, s совпадают с перебором вычетов до 10⁴."""
    for n in range(1, 10_001):
        assert count_sqrt_one(n, small_sieve) == scan_sqrt_one(n), n
        assert count_sqrt_minus_one(n, small_sieve) == scan_sqrt_minus_one(n), n


def test_scan_rejects_large_modulus():
    """Тест: перебор вычетов ограничен пределом."""
    with pytest.raises(NumberTheoryError):
        scan_sqrt_one(20_000)


def test_sieve_memory_estimate():
    """Тест: оценка памяти в 4 байта на элемент таблицы."""
    assert sieve_memory_estimate_mb(2**20 - 1) == pytest.approx(4.0)


SWEEP_LIMIT = 10_000


def test_totient_sums_to_n_over_divisors(small_sieve):
    """Тест: Σ_{d|n} φ(d) = n для всех n <= 10⁴."""
    for n in range(1, SWEEP_LIMIT + 1):
        assert sum(phi(d, small_sieve) for d in divisors(n, small_sieve)) == n, n


def test_two_omega_counts_squarefree_divisors(small_sieve):
    """Тест: 2^ω(n) = Σ_{d|n} |μ(d)| для всех n <= 10⁴."""
    for n in range(1, SWEEP_LIMIT + 1):
        squarefree = sum(abs(mu(d, small_sieve)) for d in divisors(n, small_sieve))
        assert 2 ** omega(n, small_sieve) == squarefree, n


def test_root_counts_multiplicative_on_coprime_pairs(small_sieve):
    """Тест: r(ab) = r(a)r(b) и s(ab) = s(a)s(b) для взаимно простых a <= b, ab <= 10⁴."""
    r = [0] + [count_sqrt_one(n, small_sieve) for n in range(1, SWEEP_LIMIT + 1)]
    s = [0] + [count_sqrt_minus_one(n, small_sieve) for n in range(1, SWEEP_LIMIT + 1)]
    pairs = 0
    for a in range(1, math.isqrt(SWEEP_LIMIT) + 1):
        for b in range(a, SWEEP_LIMIT // a + 1):
            if math.gcd(a, b) != 1:
                continue
            pairs += 1
            assert r[a * b] == r[a] * r[b], (a, b)
            assert s[a * b] == s[a] * s[b], (a, b)
    assert pairs > 10_000


def test_tables_match_pointwise(small_sieve):
    """Тест: таблицы φ, ψ, τ, 2^ω, r, s совпадают с поточечными функциями до 10⁴."""
    tables = {
        "phi": (totient_table(SWEEP_LIMIT, small_sieve), phi),
        "psi": (dedekind_psi_table(SWEEP_LIMIT, small_sieve), dedekind_psi),
        "tau": (tau_table(SWEEP_LIMIT, small_sieve), tau),
        "2^omega": (two_omega_table(SWEEP_LIMIT, small_sieve), lambda n, sv: 2 ** omega(n, sv)),
        "r": (sqrt_one_table(SWEEP_LIMIT, small_sieve), count_sqrt_one),
        "s": (sqrt_minus_one_table(SWEEP_LIMIT, small_sieve), count_sqrt_minus_one),
    }
    for name, (table, pointwise) in tables.items():
        assert table.dtype == np.int64
        assert table[0] == 0 and table[1] == 1, name
        for n in range(1, SWEEP_LIMIT + 1):
            assert int(table[n]) == pointwise(n, small_sieve), (name, n)


def test_table_rejects_limit_beyond_sieve(small_sieve):
    """Тест: таблица за пределом решета не строится."""
    with pytest.raises(SieveRangeError):
        totient_table(SWEEP_LIMIT + 1, small_sieve)


def test_dirichlet_convolution_identities(small_sieve):
    """Тест: μ ∗ 1 = [n = 1], φ ∗ 1 = n и 1 ∗ 1 = τ."""
    N = SWEEP_LIMIT
    mobius = mobius_table(N).astype(np.int64)
    ones = np.ones(N + 1, dtype=np.int64)
    identity = np.zeros(N + 1, dtype=np.int64)
    identity[1] = 1
    assert np.array_equal(dirichlet_convolution(mobius, ones), identity)
    assert np.array_equal(dirichlet_convolution(totient_table(N, small_sieve), ones)[1:], np.arange(1, N + 1))
    assert np.array_equal(dirichlet_convolution(ones, ones)[1:], tau_table(N, small_sieve)[1:])


def test_dirichlet_convolution_small_lengths():
    """Тест: свёртка коротких массивов и несовпадающие длины."""
    ones = np.ones(2, dtype=np.int64)
    assert dirichlet_convolution(ones, ones).tolist() == [0, 1]
    with pytest.raises(NumberTheoryError):
        dirichlet_convolution(np.ones(5, dtype=np.int64), np.ones(6, dtype=np.int64))


def test_exact_prefix_sums_match_python_sum():
    """Тест: точные префиксные суммы совпадают с sum и не переполняются."""
    values = np.arange(-50, 51, dtype=np.int64)
    positions = [0, 10, 10, 50, 100]
    assert exact_prefix_sums(values, positions) == [sum(values[: p + 1].tolist()) for p in positions]

    big = np.full(8, 2**61, dtype=np.int64)
    assert exact_prefix_sums(big, [7]) == [8 * 2**61]
