"""Конфигурация приложения."""

import os
from dataclasses import dataclass

from dotenv import load_dotenv

# Жёсткий потолок для переборного оракула изоморфизма
BRUTE_FORCE_HARD_CAP = 20


@dataclass
class AppConfig:
    """Конфигурация приложения."""

    mode: str
    log_level: str
    # Решето наименьших простых делителей
    sieve_limit: int = 1_000_000
    sieve_memory_budget_mb: int = 512
    # Потолки переборных оракулов
    brute_force_cap: int = 16
    direct_path_cap: int = 10_000
    root_scan_limit: int = 10_000
    # Точность mpmath (десятичных знаков)
    mpmath_dps: int = 30

    def validate(self) -> None:
        """Проверяет инварианты конфигурации."""
        if self.sieve_limit < 2:
            raise ValueError(f"SIEVE_LIMIT должен быть не меньше 2, получено {self.sieve_limit}")
        if self.sieve_memory_budget_mb <= 0:
            raise ValueError("SIEVE_MEMORY_BUDGET_MB должен быть положительным")
        if not 3 <= self.brute_force_cap <= BRUTE_FORCE_HARD_CAP:
            raise ValueError(
                f"BRUTE_FORCE_CAP должен лежать в [3, {BRUTE_FORCE_HARD_CAP}], "
                f"получено {self.brute_force_cap}"
            )
        if self.direct_path_cap < 3:
            raise ValueError("DIRECT_PATH_CAP должен быть не меньше 3")
        if self.root_scan_limit < 1:
            raise ValueError("ROOT_SCAN_LIMIT должен быть положительным")
        if self.mpmath_dps < 15:
            raise ValueError("MPMATH_DPS должен быть не меньше 15")
        if self.mode == "prod" and self.log_level.upper() == "DEBUG":
            raise ValueError("LOG_LEVEL=DEBUG недопустим в режиме prod")


def load_config() -> AppConfig:
    """
    Загружает конфигурацию из переменных окружения.

    Returns:
        AppConfig: Объект конфигурации

    Raises:
        ValueError: Если значения нарушают инварианты конфигурации
    """
    load_dotenv()

    def get_int_or_default(key: str, default: int) -> int:
        """Получает int из переменной окружения или возвращает default."""
        value = os.getenv(key)
        if value:
            try:
                # Разрешаем запись вида 1_000_000
                return int(value.strip().replace("_", ""))
            except ValueError:
                pass
        return default

    def get_str_or_default(key: str, default: str) -> str:
        """Получает строку из переменной окружения или возвращает default."""
        value = os.getenv(key)
        if value and value.strip():
            return value.strip()
        return default

    config = AppConfig(
        mode=get_str_or_default("MODE", "dev"),
        log_level=get_str_or_default("LOG_LEVEL", "INFO").upper(),
        sieve_limit=get_int_or_default("SIEVE_LIMIT", 1_000_000),
        sieve_memory_budget_mb=get_int_or_default("SIEVE_MEMORY_BUDGET_MB", 512),
        brute_force_cap=get_int_or_default("BRUTE_FORCE_CAP", 16),
        direct_path_cap=get_int_or_default("DIRECT_PATH_CAP", 10_000),
        root_scan_limit=get_int_or_default("ROOT_SCAN_LIMIT", 10_000),
        mpmath_dps=get_int_or_default("MPMATH_DPS", 30),
    )

    config.validate()

    return config
