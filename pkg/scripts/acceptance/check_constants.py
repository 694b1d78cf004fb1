"""Приёмка: константы плотностей, вилка для C и ряды Дирихле."""

import sys
import traceback

from _bootstrap import setup

from igc_core.logging import logger

from igc_analytic import (
    PRINTED_DECIMALS,
    density_targets,
    dirichlet_truncation_check,
    matches_printed,
    mirsky_constant,
    round_decimals,
    truncate_decimals,
)
from igc_numtheory import build_sieve

DIRICHLET_TERMS = 100_000


def check_constants() -> bool:
    """
    Опубликованные знаки констант, C₂ = 0.428249..., вилка для C при простых до 10⁶
    и усечённые ряды Σg₁(n)/n³, Στ(n)²/n² до 10⁵ членов.

    Returns:
        bool: True если все проверки прошли
    """
    try:
        config = setup()
        constants = density_targets(config.mpmath_dps)
        ok = True
        for name, value in constants.printed().items():
            passed = matches_printed(name, value)
            ok = ok and passed
            logger.info(f"{'✓' if passed else '❌'} {name} = {round_decimals(value, 10)} ({PRINTED_DECIMALS[name]})")

        bracket = mirsky_constant(1_000_000)
        if not (bracket.width < 1e-5 and bracket.contains(float(constants.mirsky_C))):
            logger.error(f"❌ Вилка [{bracket.lower}, {bracket.upper}] не содержит C")
            return False
        logger.info(f"✓ C ∈ [{bracket.lower:.8f}, {bracket.upper:.8f}]")

        c2 = truncate_decimals(constants.phi_squared_C, 6)
        passed = c2 == "0.428249"
        ok = ok and passed
        logger.info(f"{'✓' if passed else '❌'} C2 = {round_decimals(constants.phi_squared_C, 10)}")

        sieve = build_sieve(DIRICHLET_TERMS, config.sieve_memory_budget_mb)
        for series, s, tolerance in (("g1", 3.0, 1e-3), ("gu", 2.0, 1e-2)):
            check = dirichlet_truncation_check(series, s, DIRICHLET_TERMS, sieve, config.mpmath_dps)
            passed = check.gap < tolerance
            ok = ok and passed
            logger.info(f"{'✓' if passed else '❌'} ряд {series} при s={s}: зазор {check.gap:.2e}")
        return ok

    except Exception as e:
        logger.error(f"❌ Ошибка проверки констант: {e}")
        traceback.print_exc()
        return False


if __name__ == "__main__":
    sys.exit(0 if check_constants() else 1)
