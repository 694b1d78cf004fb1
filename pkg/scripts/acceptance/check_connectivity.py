"""Приёмка: критерий связности gcd(n, j, k) = 1 на всех кортежах до 200."""

import sys
import traceback

from _bootstrap import setup

from igc_core.logging import logger

from igc_graphs import Convention, build_igraph, connected_components, is_connected_tuple, iter_specs

CONNECTIVITY_LIMIT = 200


def check_connectivity() -> bool:
    """
    Строит каждый I(n, j, k) с n <= 200 и сравнивает BFS с критерием через gcd.

    Returns:
        bool: True если критерий совпал на всех кортежах
    """
    try:
        setup()
        checked = 0
        for n in range(3, CONNECTIVITY_LIMIT + 1):
            for spec in iter_specs(n, Convention.INCLUSIVE):
                connected = connected_components(build_igraph(spec)) == 1
                if connected != is_connected_tuple(spec):
                    logger.error(f"❌ {spec}: BFS connected={connected}")
                    return False
                checked += 1
        logger.info(f"✓ Критерий связности подтверждён на {checked} кортежах")
        return True

    except Exception as e:
        logger.error(f"❌ Ошибка проверки связности: {e}")
        traceback.print_exc()
        return False


if __name__ == "__main__":
    sys.exit(0 if check_connectivity() else 1)
