"""Модели параметров запуска командной строки."""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from igc_core.config.settings import BRUTE_FORCE_HARD_CAP
from igc_graphs import EXPORT_FORMATS, Convention


class Command(str, Enum):
    CENSUS = "census"
    DENSITY = "density"
    VERIFY = "verify"
    GRAPH = "graph"
    CONSTANTS = "constants"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    TABLE = "table"


class VerifySuite(str, Enum):
    BRUTE = "brute"
    SUMS = "sums"
    DIRICHLET = "dirichlet"
    ROOTS = "roots"


# Подкоманды, для которых определено соглашение inclusive
INCLUSIVE_COMMANDS = {Command.GRAPH}


class RunConfig(BaseModel):
    """Параметры одного запуска; нарушение инвариантов даёт код выхода 2."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command = Field(..., description="Подкоманда")
    max_n: int = Field(1000, ge=3, description="Наибольшее n (или N)")
    convention: Convention = Field(Convention.STRICT, description="Соглашение о границе шага k")
    output_format: OutputFormat = Field(OutputFormat.CSV, description="Формат вывода")
    output_path: Optional[Path] = Field(None, description="Файл для вывода вместо stdout")
    sieve_limit: int = Field(1_000_000, ge=2, description="Предел решета")
    brute_cap: int = Field(16, ge=3, le=BRUTE_FORCE_HARD_CAP, description="Потолок переборного оракула")
    density_mode: Optional[str] = Field(None, description="tuples или classes для density")
    suite: Optional[VerifySuite] = Field(None, description="Набор проверок для verify")
    graph_tuple: Optional[tuple[int, int, int]] = Field(None, description="(n, j, k) для graph")
    graph_format: str = Field("edgelist", description="Формат экспорта графа")

    @model_validator(mode="after")
    def check_invariants(self) -> "RunConfig":
        if self.command != Command.GRAPH and self.max_n > self.sieve_limit:
            raise ValueError(f"max_n={self.max_n} превышает предел решета {self.sieve_limit}")
        if self.convention == Convention.INCLUSIVE and self.command not in INCLUSIVE_COMMANDS:
            raise ValueError("Формулы числа классов заданы для соглашения strict")
        if self.command == Command.DENSITY and self.density_mode not in ("tuples", "classes"):
            raise ValueError("density требует режим tuples или classes")
        if self.command == Command.VERIFY and self.suite is None:
            raise ValueError("verify требует набор проверок")
        if self.command == Command.GRAPH:
            if self.graph_tuple is None:
                raise ValueError("graph требует n, j, k")
            if self.graph_format not in EXPORT_FORMATS:
                raise ValueError(f"Неизвестный формат графа: {self.graph_format}")
        return self
