"""Приёмка: числа кортежей A, B, C и их отношения."""

import sys
import traceback

from _bootstrap import setup

from igc_core.logging import logger

from igc_analytic import DensityMode, convergence_reports, density_targets
from igc_census import iter_tuple_counts_direct, total_tuples, tuple_counts_at
from igc_numtheory import build_sieve

A_AT_MILLION = 41_666_791_666_749_999
DIRECT_LIMIT = 2000
DENSITY_N = 100_000


def check_tuples() -> bool:
    """
    A(10⁶) в замкнутой форме, совпадение быстрого и прямого путей до 2000,
    B/A → 12/π² − C₂ и C/A → 1/ζ(3) при N = 10⁵.

    Returns:
        bool: True если все проверки прошли
    """
    try:
        config = setup()

        a = total_tuples(1_000_000)
        if a != A_AT_MILLION:
            logger.error(f"❌ A(10⁶) = {a}, ожидалось {A_AT_MILLION}")
            return False
        logger.info(f"✓ A(10⁶) = {a}")

        sieve = build_sieve(DENSITY_N, config.sieve_memory_budget_mb)
        direct = list(iter_tuple_counts_direct(DIRECT_LIMIT, cap=config.direct_path_cap))
        fast = tuple_counts_at(range(3, DIRECT_LIMIT + 1), sieve)
        mismatched = [d.N for d, f in zip(direct, fast) if d != f]
        if mismatched:
            logger.error(f"❌ Быстрый и прямой пути расходятся при N={mismatched[:10]}")
            return False
        logger.info(f"✓ Быстрый путь совпадает с прямым для N <= {DIRECT_LIMIT}")

        constants = density_targets(config.mpmath_dps)
        report = convergence_reports([DENSITY_N], sieve, DensityMode.TUPLES, constants)[0]
        ok = abs(report.residuals["B/A"]) < 0.003 and abs(report.residuals["C/A"]) < 0.002
        ok = ok and report.ordering_holds()
        for name, value in report.ratios.items():
            logger.info(
                f"{'✓' if ok else '❌'} {name} = {value:.6f} "
                f"(предел {report.targets[name]:.6f}, опубликовано {report.published[name]:.6f})"
            )
        return ok

    except Exception as e:
        logger.error(f"❌ Ошибка проверки кортежей: {e}")
        traceback.print_exc()
        return False


if __name__ == "__main__":
    sys.exit(0 if check_tuples() else 1)
