"""Приёмка: отношения накопленных чисел классов при N = 10⁵."""

import sys
import traceback

from _bootstrap import setup

from igc_core.logging import logger

from igc_analytic import DensityMode, convergence_reports, density_targets, residual_trend_violations
from igc_numtheory import build_sieve

CHECKPOINTS = [1000, 10_000, 100_000]

# Допуск |ratio − target| при N = 10⁵
TOLERANCES = {
    "CP/CI": 0.01,
    "CIc/CI": 0.01,
    "CP/CIc": 0.01,
    "CI/N^2": 0.02 * 5 / 16,
}


def check_classes() -> bool:
    """
    CP/CI, CIc/CI, CP/CIc и CI/N² при N = 10⁵ и тренд остатков по декадам.

    Returns:
        bool: True если все отношения в допусках
    """
    try:
        config = setup()
        sieve = build_sieve(CHECKPOINTS[-1], config.sieve_memory_budget_mb)
        constants = density_targets(config.mpmath_dps)
        reports = convergence_reports(CHECKPOINTS, sieve, DensityMode.CLASSES, constants)

        last = reports[-1]
        ok = last.ordering_holds()
        for name, tolerance in TOLERANCES.items():
            passed = abs(last.residuals[name]) < tolerance
            ok = ok and passed
            logger.info(f"{'✓' if passed else '❌'} {name} = {last.ratios[name]:.6f} (предел {last.targets[name]:.6f})")

        violations = residual_trend_violations(reports)
        if any(count > 1 for count in violations.values()):
            logger.error(f"❌ Остатки не убывают: {violations}")
            return False
        return ok

    except Exception as e:
        logger.error(f"❌ Ошибка проверки плотностей классов: {e}")
        traceback.print_exc()
        return False


if __name__ == "__main__":
    sys.exit(0 if check_classes() else 1)
