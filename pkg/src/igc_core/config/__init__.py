"""Конфигурация проекта."""

from igc_core.config.settings import AppConfig, load_config

__all__ = [
    "AppConfig",
    "load_config",
]
