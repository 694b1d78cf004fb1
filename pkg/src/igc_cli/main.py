"""Точка входа командной строки.

Коды выхода: 0 — успех, 1 — не прошёл набор verify, 2 — ошибка параметров.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Optional, TextIO

from pydantic import ValidationError

from igc_core.config import AppConfig, load_config
from igc_core.logging import init_logger, logger

from igc_analytic import AnalyticError
from igc_census import CensusError
from igc_cli.commands import cmd_census, cmd_constants, cmd_density, cmd_graph, cmd_verify
from igc_cli.models import Command, OutputFormat, RunConfig, VerifySuite
from igc_graphs import EXPORT_FORMATS, Convention, GraphError
from igc_isomorphism import IsomorphismError
from igc_numtheory import NumberTheoryError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2

COMMANDS = {
    Command.CENSUS: cmd_census,
    Command.DENSITY: cmd_density,
    Command.VERIFY: cmd_verify,
    Command.GRAPH: cmd_graph,
    Command.CONSTANTS: cmd_constants,
}

DOMAIN_ERRORS = (NumberTheoryError, GraphError, IsomorphismError, CensusError, AnalyticError)


class _Parser(argparse.ArgumentParser):
    """argparse, который поднимает исключение вместо sys.exit(2)."""

    def error(self, message: str) -> None:
        raise ValueError(message)


def build_parser(app_config: AppConfig) -> argparse.ArgumentParser:
    """
    Парсер со всеми подкомандами; значения по умолчанию берутся из AppConfig.

    Флаг --convention есть только у graph: формулы классов и проверки
    заданы для strict, а подсчёты кортежей всегда inclusive.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=1000, help="Наибольшее n (по умолчанию: 1000)")
    common.add_argument(
        "--sieve-limit",
        type=int,
        default=app_config.sieve_limit,
        help=f"Предел решета (по умолчанию: SIEVE_LIMIT={app_config.sieve_limit})",
    )
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.CSV.value,
        help="Формат вывода (по умолчанию: csv)",
    )
    common.add_argument("--out", dest="output_path", type=Path, default=None, help="Файл вывода")
    common.add_argument(
        "--brute-cap",
        type=int,
        default=app_config.brute_force_cap,
        help=f"Потолок переборного оракула (по умолчанию: {app_config.brute_force_cap})",
    )

    parser = _Parser(prog="igc", description="Перепись I-графов и проверка асимптотических плотностей")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    subparsers.add_parser("census", parents=[common], help="Числа классов I, I_c, P и их суммы")

    density = subparsers.add_parser("density", parents=[common], help="Отношения счётчиков по декадам")
    density.add_argument("density_mode", choices=["tuples", "classes"])

    verify = subparsers.add_parser("verify", parents=[common], help="Наборы проверок формул")
    verify.add_argument("suite", choices=[s.value for s in VerifySuite])

    graph = subparsers.add_parser("graph", parents=[common], help="Экспорт графа I(n, j, k)")
    graph.add_argument("n", type=int)
    graph.add_argument("j", type=int)
    graph.add_argument("k", type=int)
    graph.add_argument("--graph-format", choices=list(EXPORT_FORMATS), default="edgelist")
    graph.add_argument(
        "--convention",
        choices=[c.value for c in Convention],
        default=Convention.INCLUSIVE.value,
        help="Граница шага k (по умолчанию: inclusive)",
    )

    subparsers.add_parser("constants", parents=[common], help="Константы плотностей")

    return parser


def parse_run_config(argv: Optional[Sequence[str]], app_config: AppConfig) -> RunConfig:
    """
    Разбирает аргументы в RunConfig.

    Raises:
        ValueError: Если аргументы не разбираются
        ValidationError: Если нарушены инварианты RunConfig
    """
    args = build_parser(app_config).parse_args(argv)
    fields = {
        "command": args.command,
        "max_n": args.max_n,
        "output_format": args.output_format,
        "output_path": args.output_path,
        "sieve_limit": args.sieve_limit,
        "brute_cap": args.brute_cap,
    }
    if args.command == Command.DENSITY.value:
        fields["density_mode"] = args.density_mode
    if args.command == Command.VERIFY.value:
        fields["suite"] = args.suite
    if args.command == Command.GRAPH.value:
        fields["graph_tuple"] = (args.n, args.j, args.k)
        fields["convention"] = args.convention
        fields["graph_format"] = args.graph_format
    return RunConfig(**fields)


def main(argv: Optional[Sequence[str]] = None, stream: TextIO = sys.stdout) -> int:
    """
    Запускает подкоманду и возвращает код выхода.

    Args:
        argv: Аргументы без имени программы (по умолчанию sys.argv[1:])
        stream: Поток для данных, если не задан --out

    Returns:
        0, 1 или 2
    """
    try:
        app_config = load_config()
    except ValueError as e:
        print(f"Ошибка конфигурации: {e}", file=sys.stderr)
        return EXIT_INVALID
    init_logger(app_config)

    try:
        config = parse_run_config(argv, app_config)
    except (ValueError, ValidationError) as e:
        print(f"Ошибка параметров: {e}", file=sys.stderr)
        return EXIT_INVALID

    logger.debug(f"Команда {config.command.value}: {config.model_dump(exclude_none=True)}")
    try:
        return COMMANDS[config.command](config, app_config, stream)
    except DOMAIN_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"Ошибка: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
