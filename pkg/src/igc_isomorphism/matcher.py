"""Проверка изоморфизма простых графов перебором с возвратом.

Сначала сравниваются дешёвые инварианты (число вершин и рёбер, степени,
мультимножество профилей расстояний), затем строится биекция в порядке
обхода в ширину: каждая следующая вершина ищется среди соседей образа
уже сопоставленной вершины.
"""

from collections import defaultdict, deque
from typing import Optional

from igc_graphs import Graph

# (степень, степени соседей, профиль расстояний)
Signature = tuple[int, tuple[int, ...], tuple[int, ...]]


class IsomorphismError(ValueError):
    """Базовое исключение для ошибок модуля изоморфизма."""

    pass


def _distance_profile(graph: Graph, root: int) -> tuple[int, ...]:
    """Число недостижимых вершин, затем число вершин на расстоянии 1, 2, ... от root."""
    dist = [-1] * graph.vertex_count
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in graph.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    layers = [0] * (max(dist) + 1)
    for d in dist:
        if d >= 0:
            layers[d] += 1
    unreachable = dist.count(-1)
    return (unreachable, *layers[1:])


def _signatures(graph: Graph) -> list[Signature]:
    return [
        (
            graph.degree(v),
            tuple(sorted(graph.degree(w) for w in graph.adjacency[v])),
            _distance_profile(graph, v),
        )
        for v in range(graph.vertex_count)
    ]


def _search_order(graph: Graph, sigs: list[Signature], pool_sizes: dict[Signature, int]) -> tuple[list[int], list[int]]:
    """
    Порядок обхода и «якоря» для перебора.

    Каждая компонента начинается с вершины наибольшей степени (при равенстве —
    с наименьшим числом кандидатов), далее обход в ширину. Якорь вершины —
    её родитель в дереве обхода или −1 для корня компоненты.
    """
    n = graph.vertex_count
    order: list[int] = []
    anchor = [-1] * n
    seen = [False] * n
    starts = sorted(range(n), key=lambda v: (-graph.degree(v), pool_sizes[sigs[v]], v))
    for start in starts:
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in sorted(graph.adjacency[u], key=lambda w: (-graph.degree(w), w)):
                if not seen[v]:
                    seen[v] = True
                    anchor[v] = u
                    queue.append(v)
    return order, anchor


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[list[int]]:
    """
    Ищет изоморфизм g1 → g2.

    Args:
        g1: Первый граф
        g2: Второй граф

    Returns:
        Список mapping, где mapping[u] — образ вершины u, либо None
    """
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    if g1.degree_sequence() != g2.degree_sequence():
        return None

    n = g1.vertex_count
    if n == 0:
        return []

    sigs1 = _signatures(g1)
    sigs2 = _signatures(g2)
    if sorted(s[2] for s in sigs1) != sorted(s[2] for s in sigs2):
        return None
    if sorted(sigs1) != sorted(sigs2):
        return None

    pools: dict[Signature, list[int]] = defaultdict(list)
    for v, sig in enumerate(sigs2):
        pools[sig].append(v)
    pool_sizes = {sig: len(vs) for sig, vs in pools.items()}

    order, anchor = _search_order(g1, sigs1, pool_sizes)
    adjacency2 = [set(nbrs) for nbrs in g2.adjacency]
    mapping = [-1] * n
    used = [False] * n

    def consistent(u: int, v: int) -> bool:
        # Смежность с уже сопоставленными вершинами должна сохраняться в обе стороны
        mapped = 0
        for w in g1.adjacency[u]:
            image = mapping[w]
            if image >= 0:
                if image not in adjacency2[v]:
                    return False
                mapped += 1
        return mapped == sum(1 for y in g2.adjacency[v] if used[y])

    def extend(position: int) -> bool:
        if position == n:
            return True
        u = order[position]
        parent = anchor[u]
        candidates = g2.adjacency[mapping[parent]] if parent >= 0 else pools[sigs1[u]]
        for v in candidates:
            if used[v] or sigs2[v] != sigs1[u] or not consistent(u, v):
                continue
            mapping[u] = v
            used[v] = True
            if extend(position + 1):
                return True
            mapping[u] = -1
            used[v] = False
        return False

    return list(mapping) if extend(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """
    Проверяет, изоморфны ли два простых неориентированных графа.

    Args:
        g1: Первый граф
        g2: Второй граф

    Returns:
        True, если существует биекция вершин, сохраняющая рёбра
    """
    if g1 is g2:
        return True
    return find_isomorphism(g1, g2) is not None
