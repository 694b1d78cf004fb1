"""Тесты для констант, сумм, рядов Дирихле и отчётов о плотностях."""

import math

import mpmath
import numpy as np
import pytest

from igc_analytic import (
    PRINTED_DECIMALS,
    AnalyticError,
    ConvergenceRegionError,
    DensityMode,
    check_lemma_sums,
    convergence_reports,
    density_report,
    dirichlet_truncation_check,
    g1_gcd_identity_holds,
    main_term_predictions,
    matches_printed,
    mirsky_constant,
    mirsky_constant_precise,
    phi_squared_constant,
    residual_trend_violations,
    round_decimals,
    tail_allowance,
    truncate_decimals,
    zeta_identity_checks,
)
from igc_census import tuple_counts_fast


@pytest.fixture(scope="module")
def tuple_reports(large_sieve, constants):
    return convergence_reports([1000, 10_000, 100_000], large_sieve, DensityMode.TUPLES, constants)


@pytest.fixture(scope="module")
def class_reports(large_sieve, constants):
    return convergence_reports([1000, 10_000, 100_000], large_sieve, DensityMode.CLASSES, constants)


def test_mirsky_single_factor():
    """Тест: при prime_limit = 2 произведение равно 1/2."""
    assert mirsky_constant(2).value == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(AnalyticError):
        mirsky_constant(1)


def test_mirsky_bracket_at_million():
    """Тест: вилка при 10⁶ уже 10⁻⁵ и содержит 0.3226..."""
    bracket = mirsky_constant(1_000_000)
    assert bracket.width < 1e-5
    assert f"{bracket.value:.4f}" == "0.3226"
    assert bracket.contains(float(mirsky_constant_precise()))


def test_mirsky_bracket_contains_larger_limits():
    """Тест: вилка содержит произведения с бо́льшим пределом."""
    coarse = mirsky_constant(1000)
    for limit in (2000, 10_000, 100_000):
        assert coarse.contains(mirsky_constant(limit).value)


def test_mirsky_precise_value():
    """Тест: C через простую дзета-функцию равна 0.32263409..."""
    value = mirsky_constant_precise(40)
    assert truncate_decimals(value, 8) == "0.32263409"


def test_phi_squared_constant_value():
    """Тест: C₂ = ∏(1 − 2/p² + 1/p³) = 0.428249..., совпадает с произведением по простым до 10⁶."""
    value = phi_squared_constant(40)
    assert truncate_decimals(value, 6) == "0.428249"
    assert abs(phi_squared_constant(20) - value) < mpmath.mpf(10) ** -18

    from igc_numtheory import primes_up_to

    primes = primes_up_to(1_000_000).astype(float)
    partial = math.exp(math.fsum(np.log1p(-2.0 / primes**2 + 1.0 / primes**3)))
    # Хвост по p > 10⁶ меньше 2/10⁶ по логарифму
    assert float(value) <= partial
    assert partial - float(value) < 2e-6


def test_tuple_density_limits(constants):
    """Тест: предел B/A равен 12/π² − C₂ = 0.78760..., предел C/A равен 1/ζ(3) = 0.83190..."""
    assert float(constants.gpg_tuple_density) == pytest.approx(0.7876047, abs=1e-6)
    assert float(constants.inv_zeta3) == pytest.approx(0.8319073725, abs=1e-10)
    assert float(constants.published_gpg_tuple_density) == pytest.approx(0.893220, abs=1e-6)
    assert float(constants.published_gpg_tuple_density - constants.gpg_tuple_density) == pytest.approx(
        float(constants.phi_squared_C - constants.mirsky_C)
    )


def test_named_lists_every_constant(constants):
    """Тест: named() возвращает все поля, кроме точности."""
    named = constants.named()
    assert "dps" not in named
    assert {"phi_squared_C", "inv_zeta3", "gpg_tuple_density", "published_gpg_tuple_density"} <= set(named)
    assert set(PRINTED_DECIMALS) <= set(named)


def test_density_targets_values(constants):
    """Тест: ζ(2k) и пределы из первых принципов."""
    assert float(constants.zeta2) == pytest.approx(math.pi**2 / 6, abs=1e-15)
    assert float(constants.zeta4) == pytest.approx(math.pi**4 / 90, abs=1e-15)
    assert float(constants.zeta6) == pytest.approx(math.pi**6 / 945, abs=1e-15)
    assert float(constants.feller_tornier) == pytest.approx((1 + float(constants.mirsky_C)) / 2)
    assert float(constants.inv_zeta2) == pytest.approx(6 / math.pi**2)
    assert float(constants.inv_zeta3) == pytest.approx(1 / 1.2020569031595942, abs=1e-15)


def test_printed_decimals_reproduced(constants):
    """Тест: все константы с опубликованной записью совпадают с ней."""
    assert set(constants.printed()) == set(PRINTED_DECIMALS)
    for name, value in constants.printed().items():
        assert matches_printed(name, value), (name, round_decimals(value, 10), PRINTED_DECIMALS[name])


def test_truncate_and_round():
    """Тест: усечение и округление различаются на 0.55682|9..."""
    value = mpmath.mpf("0.5568291")
    assert truncate_decimals(value, 5) == "0.55682"
    assert round_decimals(value, 5) == "0.55683"


def test_zeta_identities():
    """Тест: ζ(2)²/ζ(4) = 5/2 и 945ζ(6) = π⁶ с рабочей точностью."""
    for identity in zeta_identity_checks():
        assert identity.gap < mpmath.mpf(10) ** -25, identity.name


def test_lemma_sums_small():
    """Тест: Σ_{n<=10} φ(n) = 32."""
    from igc_numtheory import build_sieve

    checks = {check.name: check for check in check_lemma_sums(10, build_sieve(10), phi_squared_c=0.4282)}
    assert checks["phi"].partial_sum == 32
    assert checks["tau"].partial_sum == 27


def test_lemma_sums_at_hundred_thousand(large_sieve, constants):
    """Тест: все суммы при N = 10⁵ в пределах допусков."""
    checks = check_lemma_sums(100_000, large_sieve, float(constants.phi_squared_C))
    by_name = {check.name: check for check in checks}
    assert by_name["n*phi"].deviation < 1e-3
    assert by_name["phi^2"].deviation < 1e-3
    for name in ("phi^2", "g1", "psi", "phi"):
        assert by_name[name].deviation < 1e-2, name
    assert all(check.passed for check in checks)


def test_lemma_sums_reject_small_n(small_sieve):
    """Тест: N < 2 отклоняется."""
    with pytest.raises(AnalyticError):
        check_lemma_sums(1, small_sieve)


def test_g1_gcd_identity_helper(small_sieve):
    """Тест: тождество через gcd выполняется для n <= 300."""
    assert all(g1_gcd_identity_holds(n, small_sieve) for n in range(1, 301))


def test_dirichlet_first_term():
    """Тест: при одном члене частичная сумма равна 1."""
    from igc_numtheory import build_sieve

    sieve = build_sieve(10)
    assert dirichlet_truncation_check("g1", 3.0, 1, sieve).lhs == 1.0
    assert dirichlet_truncation_check("gu", 2.0, 1, sieve).lhs == 1.0


def test_dirichlet_g1_at_three(large_sieve):
    """Тест: Σ g₁(n)/n³ до 10⁵ в пределах 10⁻³ от ζ(3)²ζ(2)/ζ(6)."""
    check = dirichlet_truncation_check("g1", 3.0, 100_000, large_sieve)
    expected = float(mpmath.zeta(3) ** 2 * mpmath.zeta(2) / mpmath.zeta(6))
    assert check.rhs == pytest.approx(expected, rel=1e-12)
    assert check.gap < 1e-3
    assert check.gap <= tail_allowance("g1", 3.0, 100_000)


def test_dirichlet_tau_squared_at_two(large_sieve):
    """Тест: Σ τ(n)²/n² до 10⁵ в пределах 10⁻² от ζ(2)⁴/ζ(4)."""
    check = dirichlet_truncation_check("gu", 2.0, 100_000, large_sieve)
    assert check.gap < 1e-2
    assert check.lhs < check.rhs


def test_dirichlet_gap_shrinks(small_sieve):
    """Тест: зазор убывает с ростом числа членов."""
    gaps = [dirichlet_truncation_check("g1", 3.0, terms, small_sieve).gap for terms in (100, 1000, 10_000)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_dirichlet_convergence_region(small_sieve):
    """Тест: s вне полуплоскости сходимости и неизвестный ряд отклоняются."""
    with pytest.raises(ConvergenceRegionError):
        dirichlet_truncation_check("g1", 2.0, 100, small_sieve)
    with pytest.raises(ConvergenceRegionError):
        dirichlet_truncation_check("gu", 1.0, 100, small_sieve)
    with pytest.raises(AnalyticError):
        dirichlet_truncation_check("phi", 3.0, 100, small_sieve)
    with pytest.raises(AnalyticError):
        dirichlet_truncation_check("g1", 3.0, 0, small_sieve)


def test_tuple_densities_at_ten_thousand(tuple_reports):
    """Тест: B/A и C/A при N = 10⁴."""
    report = tuple_reports[1]
    assert report.N == 10_000
    assert abs(report.residuals["B/A"]) < 0.01
    assert abs(report.residuals["C/A"]) < 0.005


def test_tuple_densities_at_hundred_thousand(tuple_reports):
    """Тест: B/A → 12/π² − C₂ и C/A → 1/ζ(3) при N = 10⁵ с более жёсткими допусками."""
    report = tuple_reports[2]
    assert abs(report.ratios["B/A"] - 0.787605) < 0.003
    assert abs(report.ratios["C/A"] - 0.831907) < 0.002
    assert abs(report.residuals["B/A"]) < 1e-4
    assert abs(report.residuals["C/A"]) < 1e-4


def test_published_tuple_values_are_not_limits(tuple_reports):
    """Тест: при N = 10⁵ отношения далеки от опубликованных 0.8932 и 0.98295."""
    report = tuple_reports[2]
    assert report.published["B/A"] == pytest.approx(0.893220, abs=1e-6)
    assert report.published["C/A"] == pytest.approx(0.982952, abs=1e-6)
    assert report.published["B/A"] - report.ratios["B/A"] > 0.1
    assert report.published["C/A"] - report.ratios["C/A"] > 0.1


def test_class_densities_at_hundred_thousand(class_reports):
    """Тест: CI/N², CP/CI, CIc/CI и CP/CIc при N = 10⁵."""
    report = class_reports[2]
    assert abs(report.ratios["CI/N^2"] - 5 / 16) < 0.02 * 5 / 16
    assert abs(report.ratios["CP/CI"] - 0.55683) < 0.01
    assert abs(report.ratios["CIc/CI"] - 0.60793) < 0.01
    assert abs(report.ratios["CP/CIc"] - 0.91594) < 0.01


def test_class_residuals_shrink_from_ten_thousand(class_reports):
    """Тест: |CI/N² − 5/16| и |CP/CI − предел| при N = 10⁵ меньше, чем при N = 10⁴."""
    before, after = class_reports[1].residuals, class_reports[2].residuals
    assert class_reports[1].N == 10_000 and class_reports[2].N == 100_000
    for name in ("CI/N^2", "CP/CI"):
        assert abs(after[name]) < abs(before[name]), (name, before[name], after[name])


def test_ordering_at_every_checkpoint(tuple_reports, class_reports):
    """Тест: B/A < C/A < 1 и CP/CI < CIc/CI < 1."""
    assert all(report.ordering_holds() for report in tuple_reports + class_reports)


def test_residual_trend(tuple_reports, class_reports):
    """Тест: |остаток| растёт не более одного раза на отношение."""
    for reports in (tuple_reports, class_reports):
        violations = residual_trend_violations(reports)
        assert set(violations) == set(reports[0].ratios)
        assert all(count <= 1 for count in violations.values()), violations


def test_density_report_single(small_sieve, constants):
    """Тест: отдельный отчёт по классам содержит четыре отношения."""
    report = density_report(1000, small_sieve, DensityMode.CLASSES, constants)
    assert report.N == 1000
    assert set(report.targets) == {"CP/CI", "CIc/CI", "CP/CIc", "CI/N^2"}
    assert report.targets["CI/N^2"] == pytest.approx(0.3125)


def test_main_term_predictions(small_sieve, constants):
    """Тест: предсказанные главные члены близки к точным значениям при N = 10⁴."""
    predictions = main_term_predictions(10_000, constants)
    counts = tuple_counts_fast(10_000, small_sieve)
    assert predictions["A"] == pytest.approx(counts.a, rel=1e-3)
    assert predictions["B"] == pytest.approx(counts.b, rel=1e-2)
    assert predictions["C"] == pytest.approx(counts.c, rel=1e-2)
