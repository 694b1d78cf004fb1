"""Детерминированный вывод строк в CSV, JSON или выровненную таблицу."""

import csv
import io
import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Optional

from igc_cli.models import OutputFormat

Row = dict[str, Any]


def _format_cell(value: Any) -> str:
    # repr(float) даёт кратчайшую запись, которая парсится обратно в то же число
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(rows: Sequence[Row], header: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(row[column]) for column in header])
    return buffer.getvalue()


def render_json(rows: Sequence[Row], header: Sequence[str]) -> str:
    ordered = [{column: row[column] for column in header} for row in rows]
    return json.dumps(ordered, ensure_ascii=False, indent=2) + "\n"


def render_table(rows: Sequence[Row], header: Sequence[str]) -> str:
    cells = [list(header)] + [[_format_cell(row[column]) for column in header] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in cells]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


RENDERERS = {
    OutputFormat.CSV: render_csv,
    OutputFormat.JSON: render_json,
    OutputFormat.TABLE: render_table,
}


def render(rows: Sequence[Row], header: Sequence[str], fmt: OutputFormat) -> str:
    """
    Сериализует строки в выбранный формат.

    Порядок строк и столбцов сохраняется, поэтому одинаковый вход
    всегда даёт одинаковые байты.
    """
    return RENDERERS[OutputFormat(fmt)](rows, header)


def emit(text: str, output_path: Optional[Path], stream: io.TextIOBase) -> None:
    """Пишет текст в файл (UTF-8, перевод строки \\n) или в поток."""
    if output_path is None:
        stream.write(text)
        return
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text, encoding="utf-8", newline="\n")
