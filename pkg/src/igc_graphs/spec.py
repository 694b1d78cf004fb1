"""Кортежи (n, j, k), задающие I-граф, и их классификация по критериям НОД."""

import math
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum


class GraphError(ValueError):
    """Базовое исключение для ошибок графового модуля."""

    pass


class InvalidSpecError(GraphError):
    """Кортеж (n, j, k) вне допустимой области."""

    pass


class Convention(str, Enum):
    """Соглашение о верхней границе шага k."""

    # k <= floor(n/2): область, по которой считаются плотности кортежей
    INCLUSIVE = "inclusive"
    # k < n/2: область, на которой формулы числа классов сходятся с перебором
    STRICT = "strict"


def max_step(n: int, convention: Convention) -> int:
    """
    Наибольший допустимый шаг k для данного n.

    Args:
        n: Число вершин каждого обода
        convention: Соглашение о границе

    Returns:
        floor(n/2) для inclusive, floor((n−1)/2) для strict
    """
    if convention == Convention.STRICT:
        return (n - 1) // 2
    return n // 2


@dataclass(frozen=True, slots=True)
class IGraphSpec:
    """Проверенный кортеж (n, j, k) одного I-графа I(n, j, k)."""

    n: int
    j: int
    k: int
    convention: Convention = Convention.INCLUSIVE

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InvalidSpecError(f"Требуется n >= 3, получено n={self.n}")
        if not 1 <= self.j <= self.k:
            raise InvalidSpecError(f"Требуется 1 <= j <= k, получено j={self.j}, k={self.k}")
        bound = max_step(self.n, self.convention)
        if self.k > bound:
            raise InvalidSpecError(
                f"Для n={self.n} ({self.convention.value}) требуется k <= {bound}, получено k={self.k}"
            )

    def __str__(self) -> str:
        return f"I({self.n},{self.j},{self.k})"


def iter_specs(n: int, convention: Convention = Convention.INCLUSIVE) -> Iterator[IGraphSpec]:
    """
    Перечисляет все допустимые кортежи для одного n в порядке (k, j).

    Args:
        n: Число вершин обода, n >= 3
        convention: Соглашение о границе шага k

    Yields:
        IGraphSpec для каждого 1 <= j <= k <= max_step(n)
    """
    for k in range(1, max_step(n, convention) + 1):
        for j in range(1, k + 1):
            yield IGraphSpec(n, j, k, convention)


def is_gpg_tuple(spec: IGraphSpec) -> bool:
    """I(n, j, k) изоморфен обобщённому графу Петерсена ⇔ (n, j) = 1 или (n, k) = 1."""
    return math.gcd(spec.n, spec.j) == 1 or math.gcd(spec.n, spec.k) == 1


def is_connected_tuple(spec: IGraphSpec) -> bool:
    """I(n, j, k) связен ⇔ (n, j, k) = 1."""
    return math.gcd(math.gcd(spec.n, spec.j), spec.k) == 1
