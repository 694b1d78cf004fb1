"""Частичные суммы арифметических функций против их главных членов."""

import math
from dataclasses import dataclass
from typing import Optional

from igc_core.logging import logger
from igc_numtheory import FactorSieve, dedekind_psi_of, factorize, totient_of

from igc_census import g_multiplicative_of
from igc_analytic.constants import AnalyticError, density_targets

# Допуск |ratio − 1| для каждой суммы
SUM_TOLERANCES: dict[str, float] = {
    "phi^2": 1e-2,
    "n*phi": 1e-3,
    "g1": 1e-2,
    "psi": 1e-2,
    "phi": 1e-2,
    "tau": 5e-2,
}


@dataclass(frozen=True)
class LemmaSumCheck:
    """Точная частичная сумма, предсказанный главный член и их отношение."""

    name: str
    N: int
    partial_sum: int
    main_term: float
    tolerance: float

    @property
    def ratio(self) -> float:
        return self.partial_sum / self.main_term

    @property
    def deviation(self) -> float:
        return abs(self.ratio - 1.0)

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance


def _main_terms(N: int, phi_squared_c: float) -> dict[str, float]:
    pi2 = math.pi**2
    return {
        "phi^2": phi_squared_c * N**3 / 3,
        "n*phi": 2 * N**3 / pi2,
        "g1": 5 * N**2 / 4,
        "psi": 15 * N**2 / (2 * pi2),
        "phi": 3 * N**2 / pi2,
        "tau": N * math.log(N),
    }


def check_lemma_sums(
    N: int, sieve: FactorSieve, phi_squared_c: Optional[float] = None
) -> list[LemmaSumCheck]:
    """
    Сравнивает Σφ², Σnφ, Σg₁, Σψ, Σφ и Στ по n <= N с главными членами.

    Главные члены: C₂·N³/3, 2N³/π², (5/4)N², 15N²/(2π²), 3N²/π² и N·log N.
    Суммы накапливаются в точных целых за один проход по разложениям.

    Args:
        N: Граница суммирования, 2 <= N <= sieve.limit
        sieve: Решето
        phi_squared_c: Константа C₂ = ∏(1 − 2/p² + 1/p³); по умолчанию вычисляется

    Returns:
        Список LemmaSumCheck в порядке SUM_TOLERANCES

    Raises:
        AnalyticError: Если N < 2
        SieveRangeError: Если N вне решета
    """
    if N < 2:
        raise AnalyticError(f"Требуется N >= 2, получено N={N}")
    sieve.check(N)
    if phi_squared_c is None:
        phi_squared_c = float(density_targets().phi_squared_C)

    sums = dict.fromkeys(SUM_TOLERANCES, 0)
    for n in range(1, N + 1):
        f = factorize(n, sieve)
        totient = totient_of(f)
        sums["phi^2"] += totient * totient
        sums["n*phi"] += n * totient
        sums["g1"] += g_multiplicative_of(1, f)
        sums["psi"] += dedekind_psi_of(f)
        sums["phi"] += totient
        sums["tau"] += f.tau

    main_terms = _main_terms(N, phi_squared_c)
    checks = [
        LemmaSumCheck(name=name, N=N, partial_sum=sums[name], main_term=main_terms[name], tolerance=tolerance)
        for name, tolerance in SUM_TOLERANCES.items()
    ]
    for check in checks:
        logger.debug(f"Σ{check.name} до {N}: отношение {check.ratio:.6f}")
    return checks


def g1_gcd_identity_holds(n: int, sieve: FactorSieve) -> bool:
    """g₁(n)·φ(n) = Σ_{1<=a<=n, (a,n)=1} gcd(n, a − 1)², проверка прямым перебором."""
    f = factorize(n, sieve)
    direct = sum(math.gcd(n, a - 1) ** 2 for a in range(1, n + 1) if math.gcd(a, n) == 1)
    return g_multiplicative_of(1, f) * totient_of(f) == direct
