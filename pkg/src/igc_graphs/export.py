"""Текстовый экспорт графов: список рёбер и DOT."""

from igc_graphs.graph import Graph
from igc_graphs.spec import GraphError

EXPORT_FORMATS = ("edgelist", "dot")


class ExportFormatError(GraphError):
    """Неизвестный формат экспорта."""

    pass


def _to_edgelist(graph: Graph) -> str:
    lines = [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def _to_dot(graph: Graph, name: str) -> str:
    labels = graph.labels
    lines = [f'graph "{name}" {{']
    for v in range(graph.vertex_count):
        lines.append(f"  {labels[v]};")
    for u, v in graph.edges():
        lines.append(f"  {labels[u]} -- {labels[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(graph: Graph, fmt: str, name: str = "G") -> str:
    """
    Сериализует граф в текст.

    edgelist: по строке «u v» на ребро, u < v, в порядке сортировки.
    dot: неориентированный граф Graphviz с метками a0..b(n−1).

    Args:
        graph: Граф
        fmt: Формат ("edgelist" или "dot")
        name: Имя графа в DOT

    Returns:
        Текстовое представление

    Raises:
        ExportFormatError: Если формат неизвестен
    """
    if fmt == "edgelist":
        return _to_edgelist(graph)
    if fmt == "dot":
        return _to_dot(graph, name)
    raise ExportFormatError(f"Неизвестный формат экспорта: {fmt}. Доступные: {', '.join(EXPORT_FORMATS)}")
