"""Общий runner для всех приёмочных проверок."""

import sys
import time
from pathlib import Path

# Добавляем src и каталог проверок в путь для корректных импортов
project_root = Path(__file__).parent.parent
src_path = project_root / "src"
acceptance_path = Path(__file__).parent / "acceptance"
for path in (src_path, acceptance_path):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from igc_core.logging import logger  # noqa: E402


def run_acceptance() -> bool:
    """
    Запускает все приёмочные проверки и выводит результаты.

    Returns:
        bool: True если все проверки прошли успешно
    """
    print("\n" + "=" * 60)
    print("Запуск приёмочных проверок")
    print("=" * 60 + "\n")

    checks = [
        ("Census", "check_census", "check_census"),
        ("Connectivity", "check_connectivity", "check_connectivity"),
        ("Tuples", "check_tuples", "check_tuples"),
        ("Classes", "check_classes", "check_classes"),
        ("Constants", "check_constants", "check_constants"),
    ]

    results = []

    for check_name, module_name, function_name in checks:
        try:
            print(f"Запуск проверки: {check_name}...")
            started = time.perf_counter()

            module = __import__(module_name, fromlist=[function_name])
            success = getattr(module, function_name)()

            elapsed = time.perf_counter() - started
            print(f"{'[OK]' if success else '[FAIL]'} {check_name} ({elapsed:.1f} с)")
            results.append((check_name, success))

        except ImportError as e:
            print(f"[ERROR] {check_name}: не удалось импортировать модуль: {e}")
            results.append((check_name, False))
        except Exception as e:
            logger.exception(f"Проверка {check_name} упала")
            print(f"[ERROR] {check_name}: {e}")
            results.append((check_name, False))

    # Итоговый отчёт
    print("\n" + "=" * 60)
    print("Результаты приёмочных проверок:")
    print("=" * 60)

    passed = sum(1 for _, success in results if success)
    total = len(results)

    for check_name, success in results:
        status = "[OK]" if success else "[FAIL]"
        print(f"{status} {check_name}")

    print("=" * 60)
    print(f"Пройдено: {passed}/{total}")
    print("=" * 60 + "\n")

    return passed == total


if __name__ == "__main__":
    success = run_acceptance()
    sys.exit(0 if success else 1)
