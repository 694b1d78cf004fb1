"""Простой неориентированный граф и построение I-графов.

Нумерация вершин: a_i ↦ i, b_i ↦ n + i.
"""

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

from igc_core.logging import logger

from igc_graphs.spec import GraphError, IGraphSpec


@dataclass(frozen=True, slots=True)
class Graph:
    """Неизменяемый простой граф со списками смежности."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    # Размер обода n для I-графов (2n вершин), None для произвольного графа
    rim: Optional[int] = None

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        rim: Optional[int] = None,
    ) -> "Graph":
        """
        Строит простой граф по списку рёбер, удаляя повторы.

        Args:
            vertex_count: Число вершин
            edges: Пары вершин; повторные рёбра схлопываются
            rim: Размер обода, если граф — I-граф

        Returns:
            Graph: Граф с отсортированными списками смежности

        Raises:
            GraphError: При петле или вершине вне диапазона
        """
        neighbours: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"Ребро ({u}, {v}) вне диапазона вершин [0, {vertex_count})")
            if u == v:
                raise GraphError(f"Петля в вершине {u}")
            neighbours[u].add(v)
            neighbours[v].add(u)
        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbours)
        return cls(vertex_count=vertex_count, adjacency=adjacency, rim=rim)

    @property
    def labels(self) -> list[str]:
        """Метки вершин: a0..a(n−1), b0..b(n−1) для I-графов, иначе номера."""
        if self.rim is None:
            return [str(v) for v in range(self.vertex_count)]
        return [f"a{i}" for i in range(self.rim)] + [f"b{i}" for i in range(self.rim)]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> list[int]:
        """Отсортированная по убыванию последовательность степеней."""
        return sorted((len(nbrs) for nbrs in self.adjacency), reverse=True)

    def edges(self) -> list[tuple[int, int]]:
        """Рёбра (u, v) с u < v в лексикографическом порядке."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def _rim_edges(n: int, outer_step: int, inner_step: int) -> list[tuple[int, int]]:
    """Рёбра a_i a_{i+outer}, a_i b_i, b_i b_{i+inner} (индексы по модулю n)."""
    edges = []
    for i in range(n):
        edges.append((i, (i + outer_step) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + inner_step) % n))
    return edges


def build_igraph(spec: IGraphSpec) -> Graph:
    """
    Строит I-граф I(n, j, k) как простой граф на 2n вершинах.

    При n чётном и k = n/2 (или j = n/2) рёбра обода совпадают попарно
    и схлопываются; степени соответствующих вершин падают до 2.

    Args:
        spec: Проверенный кортеж (n, j, k)

    Returns:
        Graph: I-граф с rim = n
    """
    graph = Graph.from_edges(2 * spec.n, _rim_edges(spec.n, spec.j, spec.k), rim=spec.n)
    logger.debug(f"Построен {spec}: {graph.vertex_count} вершин, {graph.edge_count} рёбер")
    return graph


def build_petersen(n: int, k: int) -> Graph:
    """Обобщённый граф Петерсена P(n, k) = I(n, 1, k)."""
    return build_igraph(IGraphSpec(n, 1, k))


def swap_rims(graph: Graph) -> Graph:
    """
    Меняет местами внешний и внутренний ободы: a_i ↔ b_i.

    Результат совпадает с графом, построенным с шагами (k, j) вместо (j, k).

    Raises:
        GraphError: Если граф не является I-графом
    """
    if graph.rim is None:
        raise GraphError("swap_rims применим только к I-графам")
    n = graph.rim

    def swap(v: int) -> int:
        return v + n if v < n else v - n

    return Graph.from_edges(graph.vertex_count, ((swap(u), swap(v)) for u, v in graph.edges()), rim=n)


def connected_components(graph: Graph) -> int:
    """
    Число компонент связности (обход в ширину).

    Args:
        graph: Граф

    Returns:
        Число компонент; 0 для графа без вершин
    """
    seen = [False] * graph.vertex_count
    components = 0
    for start in range(graph.vertex_count):
        if seen[start]:
            continue
        components += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return components


def girth(graph: Graph) -> Optional[int]:
    """
    Обхват графа: длина кратчайшего цикла.

    Обход из каждой вершины обрывается, как только найденные дальше циклы
    не могут быть короче лучшего; у I-графов обхват не больше 8, поэтому
    каждый обход просматривает ограниченную окрестность.

    Args:
        graph: Простой граф

    Returns:
        Длина кратчайшего цикла или None для леса
    """
    best: Optional[int] = None
    for root in range(graph.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # Дальнейшие циклы из этого корня не короче 2·dist[u]
            if best is not None and 2 * dist[u] >= best:
                break
            for v in graph.adjacency[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cycle = dist[u] + dist[v] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best
