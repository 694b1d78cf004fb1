"""Проверка конфигурации перед запуском."""

import sys
from pathlib import Path

import psutil

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from igc_core.config import load_config  # noqa: E402
from igc_numtheory import sieve_memory_estimate_mb  # noqa: E402

try:
    config = load_config()
    print("✓ Конфигурация загружена успешно")
    print(f"  MODE: {config.mode}")
    print(f"  LOG_LEVEL: {config.log_level}")
    print(f"  SIEVE_LIMIT: {config.sieve_limit}")
    print(f"  SIEVE_MEMORY_BUDGET_MB: {config.sieve_memory_budget_mb}")
    print(f"  BRUTE_FORCE_CAP: {config.brute_force_cap}")
    print(f"  DIRECT_PATH_CAP: {config.direct_path_cap}")
    print(f"  ROOT_SCAN_LIMIT: {config.root_scan_limit}")
    print(f"  MPMATH_DPS: {config.mpmath_dps}")
    needed = sieve_memory_estimate_mb(config.sieve_limit)
    available = psutil.virtual_memory().available / 2**20
    mark = "✓" if needed <= min(config.sieve_memory_budget_mb, available) else "✗"
    print(f"  {mark} Решето до {config.sieve_limit}: ~{needed:.1f} МБ (доступно {available:.0f} МБ)")
except Exception as e:
    print(f"✗ Ошибка загрузки конфигурации: {e}")
    exit(1)
