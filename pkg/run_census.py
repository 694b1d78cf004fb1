"""Скрипт запуска командной строки переписи I-графов."""

import sys
from pathlib import Path

# Добавляем src в путь
project_root = Path(__file__).parent
src_path = project_root / "src"
sys.path.insert(0, str(src_path))

if __name__ == "__main__":
    from igc_cli.main import main

    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nОстановка...", file=sys.stderr)
        sys.exit(130)
