"""Командная строка: перепись, плотности, проверки, экспорт графов, константы."""

from igc_cli.main import EXIT_INVALID, EXIT_OK, EXIT_VERIFY_FAILED, build_parser, main, parse_run_config
from igc_cli.models import Command, OutputFormat, RunConfig, VerifySuite

__all__ = [
    "EXIT_OK",
    "EXIT_VERIFY_FAILED",
    "EXIT_INVALID",
    "Command",
    "OutputFormat",
    "RunConfig",
    "VerifySuite",
    "build_parser",
    "main",
    "parse_run_config",
]
