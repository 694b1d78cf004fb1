"""Константы плотностей: произведения Эйлера, значения ζ и целевые пределы.

Все значения считаются из первых принципов через mpmath с рабочей точностью
mp.dps. Константа Мирского C = ∏_p (1 − 2/p²) вычисляется двумя путями:
частичным произведением по простым с гарантированной вилкой и через простую
дзета-функцию. Среднее (φ(n)/n)² равно C₂ = ∏_p (1 − 2/p² + 1/p³); именно C₂,
а не C, стоит в главном члене Σφ(n)² и в пределе B/A.
"""

import math
from dataclasses import dataclass, fields

import mpmath
import numpy as np

from igc_core.logging import logger
from igc_numtheory import primes_up_to

DEFAULT_DPS = 30

# Простые ниже этой границы в C₂ перемножаются явно, хвост идёт через P(s)
_EXPLICIT_PRIME_BOUND = 100

# Опубликованные десятичные записи констант. Два значения для кортежей
# (12/π² − C и 945/π⁶) не являются пределами B/A и C/A и хранятся
# только для сравнения.
PRINTED_DECIMALS: dict[str, str] = {
    "mirsky_C": "0.3226",
    "feller_tornier": "0.6613",
    "published_gpg_tuple_density": "0.8932",
    "inv_zeta6": "0.98295",
    "gpg_class_density": "0.55683",
    "inv_zeta2": "0.60793",
    "gpg_connected_class_density": "0.91594",
    "class_growth": "0.3125",
}


class AnalyticError(ValueError):
    """Базовое исключение для ошибок аналитического модуля."""

    pass


@dataclass(frozen=True)
class MirskyBracket:
    """Частичное произведение по простым <= prime_limit и вилка, содержащая C."""

    value: float
    lower: float
    upper: float
    prime_limit: int

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper


@dataclass(frozen=True)
class ConstantSet:
    """Все константы задачи как mpf с рабочей точностью dps."""

    dps: int
    mirsky_C: mpmath.mpf
    phi_squared_C: mpmath.mpf
    zeta2: mpmath.mpf
    zeta3: mpmath.mpf
    zeta4: mpmath.mpf
    zeta6: mpmath.mpf
    feller_tornier: mpmath.mpf
    gpg_tuple_density: mpmath.mpf
    published_gpg_tuple_density: mpmath.mpf
    inv_zeta3: mpmath.mpf
    inv_zeta6: mpmath.mpf
    gpg_class_density: mpmath.mpf
    inv_zeta2: mpmath.mpf
    gpg_connected_class_density: mpmath.mpf
    class_growth: mpmath.mpf

    def named(self) -> dict[str, mpmath.mpf]:
        """Все константы в порядке объявления полей."""
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "dps"}

    def printed(self) -> dict[str, mpmath.mpf]:
        """Константы, у которых есть опубликованная десятичная запись."""
        return {name: getattr(self, name) for name in PRINTED_DECIMALS}


@dataclass(frozen=True)
class IdentityCheck:
    """Тождество между значениями ζ: левая и правая части и их расхождение."""

    name: str
    lhs: mpmath.mpf
    rhs: mpmath.mpf

    @property
    def gap(self) -> mpmath.mpf:
        return abs(self.lhs - self.rhs)


def mirsky_constant(prime_limit: int) -> MirskyBracket:
    """
    Частичное произведение ∏_{p <= prime_limit} (1 − 2/p²) с вилкой для C.

    Для p >= 3 выполнено |log(1 − 2/p²)| <= 3/p², поэтому хвост по p > P
    уменьшает логарифм не более чем на Σ_{n>P} 3/n² <= 3/P. Вилка
    [P·exp(−3/P_lim), P] содержит C и любое частичное произведение с большим пределом.

    Args:
        prime_limit: Наибольшее учитываемое простое, не меньше 2

    Returns:
        MirskyBracket

    Raises:
        AnalyticError: Если prime_limit < 2
    """
    if prime_limit < 2:
        raise AnalyticError(f"prime_limit должен быть не меньше 2, получено {prime_limit}")

    primes = primes_up_to(prime_limit).astype(np.float64)
    value = math.exp(math.fsum(np.log1p(-2.0 / primes**2)))
    lower = value * math.exp(-3.0 / prime_limit)
    logger.debug(f"C по простым <= {prime_limit}: {value:.12f}, ширина вилки {value - lower:.2e}")
    return MirskyBracket(value=value, lower=lower, upper=value, prime_limit=prime_limit)


def mirsky_constant_precise(dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """
    C через простую дзета-функцию P(s) = Σ_p p^(−s).

    log C = log(1/2) − Σ_{m>=1} (2^m/m)·(P(2m) − 4^(−m)): множитель при p = 2
    вынесен отдельно, остальные члены убывают как (2/9)^m.
    """
    with mpmath.workdps(dps + 10):
        eps = mpmath.mpf(10) ** (-(dps + 5))
        log_c = mpmath.log(mpmath.mpf(1) / 2)
        m = 1
        while True:
            term = mpmath.mpf(2) ** m / m * (mpmath.primezeta(2 * m) - mpmath.mpf(4) ** (-m))
            log_c -= term
            if abs(term) < eps:
                break
            m += 1
        value = mpmath.exp(log_c)
    logger.debug(f"C через простую дзета-функцию: {m} членов ряда")
    return +value


def phi_squared_constant(dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """
    C₂ = ∏_p (1 − 2/p² + 1/p³), среднее значение (φ(n)/n)².

    Многочлен 1 − 2x² + x³ раскладывается как (1 − x)(1 − ax)(1 − bx) с
    a, b = (−1 ± √5)/2, поэтому для p > 100 логарифм множителя равен
    −Σ_{m>=2} (s_m/m)·p^(−m), где s_m = 1 + a^m + b^m (s_1 = 0). Простые
    ниже 100 перемножаются явно, хвостовые члены убывают как (1.62/101)^m.
    """
    with mpmath.workdps(dps + 10):
        eps = mpmath.mpf(10) ** (-(dps + 5))
        small = [int(p) for p in primes_up_to(_EXPLICIT_PRIME_BOUND)]
        log_c = mpmath.fsum(mpmath.log(1 - mpmath.mpf(2) / p**2 + mpmath.mpf(1) / p**3) for p in small)
        root5 = mpmath.sqrt(5)
        a, b = (root5 - 1) / 2, -(root5 + 1) / 2
        m = 2
        while True:
            power_sum = 1 + a**m + b**m
            tail = mpmath.primezeta(m) - mpmath.fsum(mpmath.mpf(p) ** (-m) for p in small)
            term = power_sum / m * tail
            log_c -= term
            if abs(term) < eps:
                break
            m += 1
        value = mpmath.exp(log_c)
    logger.debug(f"C2 через простую дзета-функцию: {m - 1} членов ряда")
    return +value


def density_targets(dps: int = DEFAULT_DPS) -> ConstantSet:
    """
    Предельные плотности из первых принципов.

    Предел B/A равен 2·(6/π²) − C₂, предел C/A равен 1/ζ(3). Опубликованные
    12/π² − C и 945/π⁶ сохраняются в published_gpg_tuple_density и inv_zeta6
    как столбец сравнения.

    Returns:
        ConstantSet: C, C₂, ζ(2), ζ(3), ζ(4), ζ(6), (1 + C)/2, 12/π² − C₂,
        12/π² − C, 1/ζ(3), 945/π⁶, 4(π² − 3)/(5π²), 6/π², 2(π² − 3)/15 и 5/16
    """
    c = mirsky_constant_precise(dps)
    c2 = phi_squared_constant(dps)
    with mpmath.workdps(dps):
        pi2 = mpmath.pi**2
        zeta3 = mpmath.zeta(3)
        return ConstantSet(
            dps=dps,
            mirsky_C=+c,
            phi_squared_C=+c2,
            zeta2=mpmath.zeta(2),
            zeta3=zeta3,
            zeta4=mpmath.zeta(4),
            zeta6=mpmath.zeta(6),
            feller_tornier=(1 + c) / 2,
            gpg_tuple_density=12 / pi2 - c2,
            published_gpg_tuple_density=12 / pi2 - c,
            inv_zeta3=1 / zeta3,
            inv_zeta6=945 / mpmath.pi**6,
            gpg_class_density=4 * (pi2 - 3) / (5 * pi2),
            inv_zeta2=6 / pi2,
            gpg_connected_class_density=2 * (pi2 - 3) / 15,
            class_growth=mpmath.mpf(5) / 16,
        )


def zeta_identity_checks(dps: int = DEFAULT_DPS) -> list[IdentityCheck]:
    """
    ζ(2)²/ζ(4) = 5/2, 945·ζ(6) = π⁶ и ζ(2)²/(2ζ(4)) = 5/4.

    Последнее — коэффициент при N² в Σ g₁(n).
    """
    with mpmath.workdps(dps):
        z2, z4, z6 = mpmath.zeta(2), mpmath.zeta(4), mpmath.zeta(6)
        return [
            IdentityCheck("zeta2^2/zeta4", z2 * z2 / z4, mpmath.mpf(5) / 2),
            IdentityCheck("945*zeta6", 945 * z6, mpmath.pi**6),
            IdentityCheck("zeta2^2/(2*zeta4)", z2 * z2 / (2 * z4), mpmath.mpf(5) / 4),
        ]


def _fixed_point(scaled: int, places: int) -> str:
    integer, fraction = divmod(scaled, 10**places)
    return f"{integer}.{fraction:0{places}d}"


def truncate_decimals(value: mpmath.mpf, places: int) -> str:
    """Усекает (не округляет) положительное число до places знаков."""
    with mpmath.workdps(places + 20):
        return _fixed_point(int(mpmath.floor(value * mpmath.mpf(10) ** places)), places)


def round_decimals(value: mpmath.mpf, places: int) -> str:
    """Округляет положительное число до places знаков."""
    with mpmath.workdps(places + 20):
        return _fixed_point(int(mpmath.floor(value * mpmath.mpf(10) ** places + mpmath.mpf(1) / 2)), places)


def matches_printed(name: str, value: mpmath.mpf) -> bool:
    """
    Совпадает ли value с опубликованными знаками константы name.

    Опубликованные значения записаны то усечением (0.91594), то
    округлением (0.55683, 0.60793), поэтому подходит любое из двух.
    """
    printed = PRINTED_DECIMALS[name]
    places = len(printed.split(".")[1])
    return printed in (truncate_decimals(value, places), round_decimals(value, places))
