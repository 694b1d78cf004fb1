"""Путь к src и общая инициализация для приёмочных проверок."""

import sys
from pathlib import Path
from typing import Optional

# Добавляем src в путь для корректных импортов
project_root = Path(__file__).parent.parent.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from igc_core.config import AppConfig, load_config  # noqa: E402
from igc_core.logging import init_logger  # noqa: E402

_config: Optional[AppConfig] = None


def setup() -> AppConfig:
    """Загружает конфигурацию и инициализирует логирование один раз на процесс."""
    global _config
    if _config is None:
        _config = load_config()
        init_logger(_config)
    return _config
