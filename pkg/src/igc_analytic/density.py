"""Отношения счётчиков при конечном N против предельных плотностей."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

import mpmath

from igc_core.logging import logger
from igc_numtheory import FactorSieve

from igc_census import PartialSums, TupleCounts, partial_sums_at, tuple_counts_at
from igc_analytic.constants import AnalyticError, ConstantSet, density_targets


class DensityMode(str, Enum):
    """Какие отношения строить: по кортежам или по классам изоморфизма."""

    TUPLES = "tuples"
    CLASSES = "classes"


# Имя отношения -> имя предела в ConstantSet
RATIO_TARGETS: dict[DensityMode, dict[str, str]] = {
    DensityMode.TUPLES: {
        "B/A": "gpg_tuple_density",
        "C/A": "inv_zeta3",
    },
    DensityMode.CLASSES: {
        "CP/CI": "gpg_class_density",
        "CIc/CI": "inv_zeta2",
        "CP/CIc": "gpg_connected_class_density",
        "CI/N^2": "class_growth",
    },
}

# Опубликованные пределы для столбца сравнения; для кортежей они расходятся
# с RATIO_TARGETS, для классов совпадают
PUBLISHED_TARGETS: dict[DensityMode, dict[str, str]] = {
    DensityMode.TUPLES: {
        "B/A": "published_gpg_tuple_density",
        "C/A": "inv_zeta6",
    },
    DensityMode.CLASSES: dict(RATIO_TARGETS[DensityMode.CLASSES]),
}


@dataclass(frozen=True)
class DensityReport:
    """Отношения при данном N, их пределы, опубликованные значения и остатки ratio − target."""

    N: int
    mode: DensityMode
    ratios: dict[str, float]
    targets: dict[str, float]
    published: dict[str, float]

    @property
    def residuals(self) -> dict[str, float]:
        return {name: self.ratios[name] - self.targets[name] for name in self.ratios}

    def ordering_holds(self) -> bool:
        """B/A < C/A < 1 либо CP/CI < CIc/CI < 1."""
        r = self.ratios
        if self.mode == DensityMode.TUPLES:
            return r["B/A"] < r["C/A"] < 1
        return r["CP/CI"] < r["CIc/CI"] < 1


def _tuple_ratios(counts: TupleCounts) -> dict[str, Fraction]:
    return {
        "B/A": Fraction(counts.b, counts.a),
        "C/A": Fraction(counts.c, counts.a),
    }


def _class_ratios(sums: PartialSums) -> dict[str, Fraction]:
    return {
        "CP/CI": Fraction(sums.cp, sums.ci),
        "CIc/CI": Fraction(sums.ci_c, sums.ci),
        "CP/CIc": Fraction(sums.cp, sums.ci_c),
        "CI/N^2": Fraction(sums.ci, sums.n * sums.n),
    }


def _build_report(N: int, mode: DensityMode, exact: dict[str, Fraction], constants: ConstantSet) -> DensityReport:
    targets = {name: float(getattr(constants, target)) for name, target in RATIO_TARGETS[mode].items()}
    published = {name: float(getattr(constants, target)) for name, target in PUBLISHED_TARGETS[mode].items()}
    report = DensityReport(
        N=N,
        mode=mode,
        ratios={k: float(v) for k, v in exact.items()},
        targets=targets,
        published=published,
    )
    for name, value in report.ratios.items():
        if not 0 <= value <= 1:
            raise AnalyticError(f"Отношение {name}={value} при N={N} вне [0, 1]")
    return report


def convergence_reports(
    checkpoints: Iterable[int],
    sieve: FactorSieve,
    mode: DensityMode,
    constants: Optional[ConstantSet] = None,
) -> list[DensityReport]:
    """
    Отчёты о плотностях сразу для нескольких N за один проход по n.

    Args:
        checkpoints: Границы N >= 3
        sieve: Решето, покрывающее наибольшую границу
        mode: Кортежи или классы
        constants: Пределы; по умолчанию density_targets()

    Returns:
        Список DensityReport по возрастанию N
    """
    mode = DensityMode(mode)
    constants = constants or density_targets()
    reports: list[DensityReport] = []
    if mode == DensityMode.TUPLES:
        for counts in tuple_counts_at(checkpoints, sieve):
            reports.append(_build_report(counts.N, mode, _tuple_ratios(counts), constants))
    else:
        for sums in partial_sums_at(checkpoints, sieve):
            reports.append(_build_report(sums.n, mode, _class_ratios(sums), constants))

    for report in reports:
        logger.info(
            f"N={report.N} ({mode.value}): "
            + ", ".join(f"{name}={value:.6f}" for name, value in report.ratios.items())
        )
    return reports


def density_report(
    N: int, sieve: FactorSieve, mode: DensityMode, constants: Optional[ConstantSet] = None
) -> DensityReport:
    """
    Отношения B/A и C/A (кортежи) либо CP/CI, CIc/CI, CP/CIc и CI/N² (классы) при данном N.

    Raises:
        CensusError: Если N < 3
        SieveRangeError: Если N вне решета
    """
    return convergence_reports([N], sieve, mode, constants)[0]


def residual_trend_violations(reports: Sequence[DensityReport]) -> dict[str, int]:
    """
    Сколько раз |остаток| вырос при переходе к следующему N, по каждому отношению.

    Отчёты должны идти по возрастанию N.
    """
    violations: dict[str, int] = {}
    for previous, current in zip(reports, reports[1:]):
        before, after = previous.residuals, current.residuals
        for name in after:
            violations.setdefault(name, 0)
            if abs(after[name]) > abs(before[name]):
                violations[name] += 1
    return violations


def main_term_predictions(N: int, constants: Optional[ConstantSet] = None) -> dict[str, float]:
    """
    Предсказанные главные члены счётчиков при данном N.

    A ≈ N³/24, B ≈ (1/(2π²) − C₂/24)·N³, C ≈ N³/(24ζ(3)),
    CI ≈ 5N²/16, CI_c ≈ 15N²/(8π²), CP ≈ (π² − 3)/(4π²)·N².
    """
    constants = constants or density_targets()
    with mpmath.workdps(constants.dps):
        pi2 = mpmath.pi**2
        n = mpmath.mpf(N)
        predictions = {
            "A": n**3 / 24,
            "B": (1 / (2 * pi2) - constants.phi_squared_C / 24) * n**3,
            "C": n**3 / (24 * constants.zeta3),
            "CI": 5 * n**2 / 16,
            "CIc": 15 * n**2 / (8 * pi2),
            "CP": (pi2 - 3) / (4 * pi2) * n**2,
        }
        return {name: float(value) for name, value in predictions.items()}
