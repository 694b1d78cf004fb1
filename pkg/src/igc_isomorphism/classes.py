"""Разбиение кортежей (n, j, k) на классы изоморфизма прямым перебором."""

from collections.abc import Iterator
from dataclasses import dataclass

from igc_core.logging import logger
from igc_graphs import (
    Convention,
    IGraphSpec,
    build_igraph,
    is_connected_tuple,
    is_gpg_tuple,
    iter_specs,
)

from igc_isomorphism.matcher import IsomorphismError, are_isomorphic

DEFAULT_BRUTE_FORCE_CAP = 16


class BruteForceCapError(IsomorphismError):
    """n превышает потолок переборного оракула."""

    pass


class ClassInvariantError(IsomorphismError):
    """В одном классе оказались связный и несвязный графы."""

    pass


@dataclass(frozen=True)
class IsoClassPartition:
    """Разбиение всех допустимых кортежей с данным n на классы изоморфизма."""

    n: int
    convention: Convention
    classes: tuple[tuple[IGraphSpec, ...], ...]

    @property
    def tuple_count(self) -> int:
        return sum(len(members) for members in self.classes)


@dataclass(frozen=True)
class ClassCounts:
    """Число классов: всего, связных, содержащих обобщённый граф Петерсена."""

    total: int
    connected: int
    gpg: int


class _DisjointSets:
    """Система непересекающихся множеств со сжатием путей."""

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # Корнем остаётся меньший индекс, порядок классов детерминирован
            self.parent[max(ra, rb)] = min(ra, rb)


def enumerate_classes(
    n: int,
    convention: Convention = Convention.STRICT,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
) -> IsoClassPartition:
    """
    Разбивает все кортежи с данным n на классы изоморфизма.

    Каждый новый граф сравнивается с представителями уже найденных классов;
    при совпадении кортежи объединяются.

    Args:
        n: Число вершин обода, 3 <= n <= cap
        convention: Соглашение о границе шага k
        cap: Потолок переборного оракула

    Returns:
        IsoClassPartition: Классы в порядке появления первого кортежа

    Raises:
        BruteForceCapError: Если n > cap
        ClassInvariantError: Если класс смешивает связные и несвязные графы
    """
    if n > cap:
        raise BruteForceCapError(f"n={n} превышает потолок переборного оракула {cap}")
    if n < 3:
        raise IsomorphismError(f"Требуется n >= 3, получено n={n}")

    specs = list(iter_specs(n, convention))
    graphs = [build_igraph(spec) for spec in specs]
    sets = _DisjointSets(len(specs))
    representatives: list[int] = []

    for idx, graph in enumerate(graphs):
        for rep in representatives:
            if are_isomorphic(graphs[rep], graph):
                sets.union(rep, idx)
                break
        else:
            representatives.append(idx)

    grouped: dict[int, list[IGraphSpec]] = {}
    for idx, spec in enumerate(specs):
        grouped.setdefault(sets.find(idx), []).append(spec)

    for members in grouped.values():
        flags = {is_connected_tuple(spec) for spec in members}
        if len(flags) > 1:
            raise ClassInvariantError(
                f"Класс {[str(s) for s in members]} содержит связные и несвязные графы"
            )

    partition = IsoClassPartition(
        n=n,
        convention=convention,
        classes=tuple(tuple(members) for members in grouped.values()),
    )
    logger.debug(
        f"n={n} ({convention.value}): {len(specs)} кортежей, {len(partition.classes)} классов"
    )
    return partition


def class_counts(partition: IsoClassPartition) -> ClassCounts:
    """
    Считает классы: всего, связных и содержащих GPG.

    Класс связен, если связен любой его член (связность — инвариант класса);
    класс GPG, если хотя бы один член удовлетворяет критерию GPG.
    """
    return ClassCounts(
        total=len(partition.classes),
        connected=sum(1 for members in partition.classes if is_connected_tuple(members[0])),
        gpg=sum(1 for members in partition.classes if any(is_gpg_tuple(m) for m in members)),
    )


def census_oracle(
    max_n: int,
    convention: Convention = Convention.STRICT,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
) -> Iterator[tuple[int, ClassCounts]]:
    """
    Переборные числа классов для всех 3 <= n <= max_n.

    Yields:
        (n, ClassCounts) по возрастанию n
    """
    for n in range(3, max_n + 1):
        yield n, class_counts(enumerate_classes(n, convention, cap))
