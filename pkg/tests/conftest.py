"""Общие фикстуры тестов."""

import sys
from pathlib import Path

import pytest

# Добавляем src в путь, как это делают скрипты запуска
src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from igc_numtheory import build_sieve  # noqa: E402


@pytest.fixture(scope="session")
def small_sieve():
    """Решето до 10⁴ для поточечных проверок."""
    return build_sieve(10_000)


@pytest.fixture(scope="session")
def large_sieve():
    """Решето до 10⁵ для проверок асимптотики."""
    return build_sieve(100_000)


@pytest.fixture(scope="session")
def constants():
    """Пределы плотностей с рабочей точностью по умолчанию."""
    from igc_analytic import density_targets

    return density_targets()
