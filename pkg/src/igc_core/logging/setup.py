"""Настройка логирования."""

import sys

from loguru import logger

from igc_core.config.settings import AppConfig


def init_logger(config: AppConfig) -> None:
    """
    Инициализирует логгер на основе конфигурации.

    Все сообщения идут в stderr: stdout занят выводом данных (CSV/JSON).

    Args:
        config: Конфигурация приложения
    """
    # Удаляем стандартный обработчик loguru
    logger.remove()

    logger.add(
        sys.stderr,
        level=config.log_level,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
        "<level>{message}</level>",
        colorize=True,
    )

    logger.debug(f"Режим работы: {config.mode}")
    logger.debug(f"Уровень логирования: {config.log_level}")
    logger.debug(f"Предел решета: {config.sieve_limit} (бюджет {config.sieve_memory_budget_mb} МБ)")
    logger.debug(f"Потолок переборного оракула: n <= {config.brute_force_cap}")
    logger.debug(f"Точность mpmath: {config.mpmath_dps} знаков")
