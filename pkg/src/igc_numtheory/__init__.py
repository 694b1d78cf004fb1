"""Арифметические функции на решете наименьших простых делителей."""

from igc_numtheory.functions import (
    dedekind_psi,
    dedekind_psi_of,
    divisors,
    gcd,
    gcd3,
    jordan2,
    jordan2_of,
    mobius_table,
    mobius_of,
    mu,
    omega,
    phi,
    squarefree_divisors,
    tau,
    totient_of,
)
from igc_numtheory.roots import (
    count_sqrt_minus_one,
    count_sqrt_minus_one_of,
    count_sqrt_one,
    count_sqrt_one_of,
    scan_sqrt_minus_one,
    scan_sqrt_one,
    sqrt_minus_one_local,
    sqrt_one_local,
)
from igc_numtheory.sieve import (
    FactorSieve,
    Factorization,
    NumberTheoryError,
    SieveBudgetError,
    SieveRangeError,
    build_sieve,
    factorize,
    primes_up_to,
    sieve_memory_estimate_mb,
)
from igc_numtheory.tables import (
    dedekind_psi_table,
    dirichlet_convolution,
    exact_prefix_sums,
    multiplicative_table,
    sieve_primes,
    sqrt_minus_one_table,
    sqrt_one_table,
    tau_table,
    totient_table,
    two_omega_table,
)

__all__ = [
    "FactorSieve",
    "Factorization",
    "NumberTheoryError",
    "SieveBudgetError",
    "SieveRangeError",
    "build_sieve",
    "factorize",
    "primes_up_to",
    "sieve_memory_estimate_mb",
    "phi",
    "mu",
    "omega",
    "tau",
    "jordan2",
    "dedekind_psi",
    "totient_of",
    "mobius_of",
    "jordan2_of",
    "mobius_table",
    "dedekind_psi_of",
    "divisors",
    "squarefree_divisors",
    "gcd",
    "gcd3",
    "count_sqrt_one",
    "count_sqrt_minus_one",
    "count_sqrt_one_of",
    "count_sqrt_minus_one_of",
    "scan_sqrt_one",
    "scan_sqrt_minus_one",
    "sqrt_one_local",
    "sqrt_minus_one_local",
    "sieve_primes",
    "multiplicative_table",
    "totient_table",
    "dedekind_psi_table",
    "tau_table",
    "two_omega_table",
    "sqrt_one_table",
    "sqrt_minus_one_table",
    "dirichlet_convolution",
    "exact_prefix_sums",
]
