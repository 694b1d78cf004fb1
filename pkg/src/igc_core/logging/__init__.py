"""Логирование."""

from loguru import logger

from igc_core.logging.setup import init_logger

__all__ = ["logger", "init_logger"]
