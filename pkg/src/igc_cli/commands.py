"""Реализация подкоманд: перепись, плотности, проверки, экспорт графа, константы."""

import math
import sys
from dataclasses import dataclass
from typing import TextIO

from igc_core.config import AppConfig
from igc_core.logging import logger

from igc_analytic import (
    PRINTED_DECIMALS,
    DensityMode,
    check_lemma_sums,
    convergence_reports,
    density_targets,
    dirichlet_truncation_check,
    g1_gcd_identity_holds,
    main_term_predictions,
    matches_printed,
    round_decimals,
    tail_allowance,
    zeta_identity_checks,
)
from igc_census import MIN_N, census_record, coprime_error_bounds_hold, iter_census, tuple_counts_fast
from igc_cli.models import RunConfig, VerifySuite
from igc_cli.output import emit, render
from igc_graphs import IGraphSpec, build_igraph, export, girth, is_connected_tuple, is_gpg_tuple, iter_specs, swap_rims
from igc_isomorphism import are_isomorphic, census_oracle
from igc_numtheory import (
    FactorSieve,
    build_sieve,
    count_sqrt_minus_one,
    count_sqrt_one,
    scan_sqrt_minus_one,
    scan_sqrt_one,
)

CENSUS_HEADER = ("n", "I", "I_c", "P", "CI", "CI_c", "CP")
DENSITY_HEADER = ("N", "ratio_name", "value", "target", "residual", "published")
CONSTANTS_HEADER = ("name", "value", "printed")

# Первая граница для отчётов о плотностях
FIRST_DECADE = 1000

# Сколько n проверять прямым перебором в наборе sums
GCD_IDENTITY_LIMIT = 2000
COPRIME_BOUND_LIMIT = 500

# Допуск главных членов A, B, C: MAIN_TERM_SLACK·log N / N
MAIN_TERM_SLACK = 10


@dataclass(frozen=True)
class CheckResult:
    """Результат одной проверки; name указывает, что именно проверялось."""

    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "[OK]" if self.passed else "[FAIL]"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _sieve_for(limit: int, app_config: AppConfig) -> FactorSieve:
    return build_sieve(max(limit, 2), app_config.sieve_memory_budget_mb)


def decade_checkpoints(max_n: int) -> list[int]:
    """N = 10³, 10⁴, ... <= max_n; при max_n < 10³ — только max_n."""
    if max_n < FIRST_DECADE:
        return [max_n]
    checkpoints = []
    N = FIRST_DECADE
    while N <= max_n:
        checkpoints.append(N)
        N *= 10
    return checkpoints


def cmd_census(config: RunConfig, app_config: AppConfig, stream: TextIO = sys.stdout) -> int:
    """Строки n, I, I_c, P и накопленные CI, CI_c, CP для n = 3..max_n."""
    sieve = _sieve_for(config.max_n, app_config)
    rows = [
        {
            "n": record.n,
            "I": record.i_count,
            "I_c": record.ic_count,
            "P": record.p_count,
            "CI": sums.ci,
            "CI_c": sums.ci_c,
            "CP": sums.cp,
        }
        for record, sums in iter_census(config.max_n, sieve)
    ]
    emit(render(rows, CENSUS_HEADER, config.output_format), config.output_path, stream)
    return 0


def cmd_density(config: RunConfig, app_config: AppConfig, stream: TextIO = sys.stdout) -> int:
    """Строки N, ratio_name, value, target, residual по декадам и опубликованный предел для сравнения."""
    sieve = _sieve_for(config.max_n, app_config)
    constants = density_targets(app_config.mpmath_dps)
    reports = convergence_reports(decade_checkpoints(config.max_n), sieve, DensityMode(config.density_mode), constants)
    rows = []
    for report in reports:
        residuals = report.residuals
        for name, value in report.ratios.items():
            rows.append(
                {
                    "N": report.N,
                    "ratio_name": name,
                    "value": value,
                    "target": report.targets[name],
                    "residual": residuals[name],
                    "published": report.published[name],
                }
            )
    emit(render(rows, DENSITY_HEADER, config.output_format), config.output_path, stream)
    return 0


def _verify_brute(config: RunConfig, app_config: AppConfig) -> list[CheckResult]:
    sieve = _sieve_for(config.brute_cap, app_config)
    results = []
    for n, counts in census_oracle(config.brute_cap, config.convention, config.brute_cap):
        record = census_record(n, sieve)
        expected = (record.i_count, record.ic_count, record.p_count)
        actual = (counts.total, counts.connected, counts.gpg)
        results.append(
            CheckResult(
                name=f"классы n={n}: I, I_c, P против перебора изоморфизмов",
                passed=expected == actual,
                detail=f"formula={expected} brute={actual}",
            )
        )

    # I(n, k, j) строится обменом ободов и должен опознаваться как I(n, j, k)
    failing = [
        str(spec)
        for n in range(MIN_N, config.brute_cap + 1)
        for spec in iter_specs(n, config.convention)
        if spec.j < spec.k and not are_isomorphic(swap_rims(build_igraph(spec)), build_igraph(spec))
    ]
    results.append(
        CheckResult(
            name=f"I(n, j, k) ≅ I(n, k, j) после обмена ободов для n <= {config.brute_cap}",
            passed=not failing,
            detail=f"не прошли {failing[:10]}" if failing else "",
        )
    )
    return results


def _verify_sums(config: RunConfig, app_config: AppConfig) -> list[CheckResult]:
    sieve = _sieve_for(config.max_n, app_config)
    constants = density_targets(app_config.mpmath_dps)
    results = [
        CheckResult(
            name=f"сумма {check.name} до N={check.N} против главного члена",
            passed=check.passed,
            detail=f"ratio={check.ratio:.6f} tolerance={check.tolerance}",
        )
        for check in check_lemma_sums(config.max_n, sieve, float(constants.phi_squared_C))
    ]

    identity_limit = min(config.max_n, GCD_IDENTITY_LIMIT)
    failing = [n for n in range(1, identity_limit + 1) if not g1_gcd_identity_holds(n, sieve)]
    results.append(
        CheckResult(
            name=f"тождество g1 через gcd для n <= {identity_limit}",
            passed=not failing,
            detail=f"не прошли n={failing[:10]}" if failing else "",
        )
    )

    bound_limit = min(config.max_n, COPRIME_BOUND_LIMIT)
    failing = [
        n for n in range(1, bound_limit + 1) if not all(coprime_error_bounds_hold(m, n, sieve) for m in (n // 2, n))
    ]
    results.append(
        CheckResult(
            name=f"остатки числа и суммы взаимно простых для n <= {bound_limit}",
            passed=not failing,
            detail=f"не прошли n={failing[:10]}" if failing else "",
        )
    )

    for identity in zeta_identity_checks(app_config.mpmath_dps):
        results.append(
            CheckResult(
                name=f"тождество {identity.name}",
                passed=identity.gap < 1e-12,
                detail=f"gap={float(identity.gap):.2e}",
            )
        )

    counts = tuple_counts_fast(config.max_n, sieve)
    predictions = main_term_predictions(config.max_n, constants)
    tolerance = MAIN_TERM_SLACK * math.log(config.max_n) / config.max_n
    for name, exact in (("A", counts.a), ("B", counts.b), ("C", counts.c)):
        deviation = abs(exact / predictions[name] - 1)
        results.append(
            CheckResult(
                name=f"главный член {name}(N) при N={config.max_n}",
                passed=deviation <= tolerance,
                detail=f"exact={exact} predicted={predictions[name]:.6e} deviation={deviation:.2e} tolerance={tolerance:.2e}",
            )
        )
    return results


def _verify_dirichlet(config: RunConfig, app_config: AppConfig) -> list[CheckResult]:
    sieve = _sieve_for(config.max_n, app_config)
    results = []
    for series, s in (("g1", 3.0), ("gu", 2.0)):
        check = dirichlet_truncation_check(series, s, config.max_n, sieve, app_config.mpmath_dps)
        allowance = tail_allowance(series, s, check.terms)
        results.append(
            CheckResult(
                name=f"ряд Дирихле {series} при s={s}, {check.terms} членов",
                passed=check.gap <= allowance,
                detail=f"lhs={check.lhs:.10f} rhs={check.rhs:.10f} gap={check.gap:.2e} allowance={allowance:.2e}",
            )
        )
    return results


def _verify_roots(config: RunConfig, app_config: AppConfig) -> list[CheckResult]:
    limit = min(config.max_n, app_config.root_scan_limit)
    sieve = _sieve_for(limit, app_config)
    failing_one = [n for n in range(1, limit + 1) if count_sqrt_one(n, sieve) != scan_sqrt_one(n, limit)]
    failing_minus = [
        n for n in range(1, limit + 1) if count_sqrt_minus_one(n, sieve) != scan_sqrt_minus_one(n, limit)
    ]
    return [
        CheckResult(
            name=f"r(n) по формуле против перебора вычетов для n <= {limit}",
            passed=not failing_one,
            detail=f"не прошли n={failing_one[:10]}" if failing_one else "",
        ),
        CheckResult(
            name=f"s(n) по формуле против перебора вычетов для n <= {limit}",
            passed=not failing_minus,
            detail=f"не прошли n={failing_minus[:10]}" if failing_minus else "",
        ),
    ]


SUITES = {
    VerifySuite.BRUTE: _verify_brute,
    VerifySuite.SUMS: _verify_sums,
    VerifySuite.DIRICHLET: _verify_dirichlet,
    VerifySuite.ROOTS: _verify_roots,
}


def cmd_verify(config: RunConfig, app_config: AppConfig, stream: TextIO = sys.stdout) -> int:
    """
    Запускает набор проверок и печатает по строке на проверку.

    Returns:
        0, если все проверки прошли, иначе 1
    """
    results = SUITES[config.suite](config, app_config)
    failed = [result for result in results if not result.passed]
    lines = [result.line() for result in results]
    lines.append(f"Пройдено: {len(results) - len(failed)}/{len(results)}")
    emit("\n".join(lines) + "\n", config.output_path, stream)
    if failed:
        logger.error(f"Набор {config.suite.value}: {len(failed)} проверок не прошли")
        return 1
    return 0


def cmd_graph(config: RunConfig, app_config: AppConfig, stream: TextIO = sys.stdout) -> int:
    """Экспорт I(n, j, k) и строка классификации gpg=... connected=... girth=..."""
    n, j, k = config.graph_tuple
    spec = IGraphSpec(n=n, j=j, k=k, convention=config.convention)
    graph = build_igraph(spec)
    text = export(graph, config.graph_format, name=str(spec))
    text += (
        f"# gpg={str(is_gpg_tuple(spec)).lower()} connected={str(is_connected_tuple(spec)).lower()} "
        f"girth={girth(graph)}\n"
    )
    emit(text, config.output_path, stream)
    return 0


def cmd_constants(config: RunConfig, app_config: AppConfig, stream: TextIO = sys.stdout) -> int:
    """Каждая константа строкой с 10 знаками рядом с опубликованной записью, если она есть."""
    constants = density_targets(app_config.mpmath_dps)
    rows = []
    for name, value in constants.named().items():
        printed = PRINTED_DECIMALS.get(name, "")
        if printed and not matches_printed(name, value):
            logger.warning(f"{name}: {round_decimals(value, 10)} не совпадает с {printed}")
        rows.append({"name": name, "value": round_decimals(value, 10), "printed": printed})
    emit(render(rows, CONSTANTS_HEADER, config.output_format), config.output_path, stream)
    return 0
