"""Приёмка: формулы числа классов против перебора и неравенства между ними."""

import sys
import traceback

from _bootstrap import setup

from igc_core.logging import logger

from igc_census import census_record
from igc_isomorphism import census_oracle
from igc_numtheory import build_sieve

ORDERING_LIMIT = 10_000


def check_census() -> bool:
    """
    Сверяет I, I_c, P с переборными классами до BRUTE_FORCE_CAP
    и проверяет 0 <= P <= I, 0 <= I_c <= I до 10⁴.

    Returns:
        bool: True если все значения совпали
    """
    try:
        config = setup()
        sieve = build_sieve(ORDERING_LIMIT, config.sieve_memory_budget_mb)

        logger.info(f"Перебор классов для n <= {config.brute_force_cap}...")
        for n, counts in census_oracle(config.brute_force_cap, cap=config.brute_force_cap):
            record = census_record(n, sieve)
            expected = (record.i_count, record.ic_count, record.p_count)
            actual = (counts.total, counts.connected, counts.gpg)
            if expected != actual:
                logger.error(f"❌ n={n}: формулы {expected}, перебор {actual}")
                return False
            logger.info(f"✓ n={n}: I={expected[0]} I_c={expected[1]} P={expected[2]}")

        # census_record сам проверяет целочисленность и порядок
        for n in range(3, ORDERING_LIMIT + 1):
            census_record(n, sieve)
        logger.info(f"✓ Формулы целочисленны и упорядочены для n <= {ORDERING_LIMIT}")
        return True

    except Exception as e:
        logger.error(f"❌ Ошибка проверки переписи: {e}")
        traceback.print_exc()
        return False


if __name__ == "__main__":
    sys.exit(0 if check_census() else 1)
