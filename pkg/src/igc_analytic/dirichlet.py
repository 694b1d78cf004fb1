"""Усечённые ряды Дирихле для g₁ и τ² против их выражений через ζ.

Σ g₁(n)/n^s = ζ(s)²·ζ(s − 1)/ζ(2s) при s > 2,
Σ τ(n)²/n^s = ζ(s)⁴/ζ(2s) при s > 1.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass

import mpmath

from igc_numtheory import FactorSieve, Factorization, factorize

from igc_census import g_multiplicative_of
from igc_analytic.constants import DEFAULT_DPS, AnalyticError


class ConvergenceRegionError(AnalyticError):
    """s вне полуплоскости абсолютной сходимости ряда."""

    pass


@dataclass(frozen=True)
class DirichletSeries:
    name: str
    abscissa: float
    coefficient: Callable[[Factorization], int]
    closed_form: Callable[[mpmath.mpf], mpmath.mpf]


SERIES: dict[str, DirichletSeries] = {
    "g1": DirichletSeries(
        name="g1",
        abscissa=2.0,
        coefficient=lambda f: g_multiplicative_of(1, f),
        closed_form=lambda s: mpmath.zeta(s) ** 2 * mpmath.zeta(s - 1) / mpmath.zeta(2 * s),
    ),
    "gu": DirichletSeries(
        name="gu",
        abscissa=1.0,
        coefficient=lambda f: g_multiplicative_of("u", f),
        closed_form=lambda s: mpmath.zeta(s) ** 4 / mpmath.zeta(2 * s),
    ),
}


@dataclass(frozen=True)
class DirichletCheck:
    """Частичная сумма первых terms членов и значение замкнутой формы."""

    series: str
    s: float
    terms: int
    lhs: float
    rhs: float

    @property
    def gap(self) -> float:
        return abs(self.lhs - self.rhs)


def dirichlet_truncation_check(
    series: str, s: float, terms: int, sieve: FactorSieve, dps: int = DEFAULT_DPS
) -> DirichletCheck:
    """
    Сравнивает Σ_{n<=terms} g(n)/n^s с замкнутой формой.

    Args:
        series: "g1" или "gu"
        s: Вещественная точка, больше абсциссы сходимости ряда
        terms: Число членов, 1 <= terms <= sieve.limit
        sieve: Решето
        dps: Точность mpmath для правой части

    Returns:
        DirichletCheck; при росте terms зазор убывает

    Raises:
        AnalyticError: Если ряд неизвестен или terms < 1
        ConvergenceRegionError: Если s не больше абсциссы сходимости
        SieveRangeError: Если terms вне решета
    """
    try:
        spec = SERIES[series]
    except KeyError:
        raise AnalyticError(f"Неизвестный ряд: {series}. Доступные: {', '.join(SERIES)}") from None
    if s <= spec.abscissa:
        raise ConvergenceRegionError(f"Ряд {series} сходится только при s > {spec.abscissa}, получено s={s}")
    if terms < 1:
        raise AnalyticError(f"Требуется terms >= 1, получено {terms}")
    sieve.check(terms)

    lhs = math.fsum(spec.coefficient(factorize(n, sieve)) / n**s for n in range(1, terms + 1))
    with mpmath.workdps(dps):
        rhs = float(spec.closed_form(mpmath.mpf(s)))
    return DirichletCheck(series=series, s=s, terms=terms, lhs=lhs, rhs=rhs)


def tail_allowance(series: str, s: float, terms: int) -> float:
    """
    Грубая оценка сверху для хвоста Σ_{n>terms} g(n)/n^s.

    Σ_{n<=x} g₁(n) ~ (5/4)x² даёт хвост около (5/2)·T^(2−s)/(s − 2);
    Σ_{n<=x} τ(n)² ~ x·log³x/π² даёт хвост около log³T·T^(1−s)/(π²(s − 1)).
    """
    if series == "g1":
        return 5.0 * terms ** (2.0 - s) / (s - 2.0)
    if series == "gu":
        return 4.0 * (math.log(terms) + 1.0) ** 3 * terms ** (1.0 - s) / (math.pi**2 * (s - 1.0))
    raise AnalyticError(f"Неизвестный ряд: {series}")
