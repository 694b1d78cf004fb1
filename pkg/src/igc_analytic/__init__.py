"""Константы, проверки сумм и рядов Дирихле, отчёты о сходимости плотностей."""

from igc_analytic.constants import (
    DEFAULT_DPS,
    PRINTED_DECIMALS,
    AnalyticError,
    ConstantSet,
    IdentityCheck,
    MirskyBracket,
    density_targets,
    matches_printed,
    mirsky_constant,
    mirsky_constant_precise,
    phi_squared_constant,
    round_decimals,
    truncate_decimals,
    zeta_identity_checks,
)
from igc_analytic.density import (
    PUBLISHED_TARGETS,
    RATIO_TARGETS,
    DensityMode,
    DensityReport,
    convergence_reports,
    density_report,
    main_term_predictions,
    residual_trend_violations,
)
from igc_analytic.dirichlet import (
    SERIES,
    ConvergenceRegionError,
    DirichletCheck,
    dirichlet_truncation_check,
    tail_allowance,
)
from igc_analytic.summatory import (
    SUM_TOLERANCES,
    LemmaSumCheck,
    check_lemma_sums,
    g1_gcd_identity_holds,
)

__all__ = [
    "DEFAULT_DPS",
    "PRINTED_DECIMALS",
    "RATIO_TARGETS",
    "PUBLISHED_TARGETS",
    "SERIES",
    "SUM_TOLERANCES",
    "AnalyticError",
    "ConvergenceRegionError",
    "ConstantSet",
    "IdentityCheck",
    "MirskyBracket",
    "DensityMode",
    "DensityReport",
    "DirichletCheck",
    "LemmaSumCheck",
    "mirsky_constant",
    "mirsky_constant_precise",
    "phi_squared_constant",
    "density_targets",
    "zeta_identity_checks",
    "truncate_decimals",
    "round_decimals",
    "matches_printed",
    "check_lemma_sums",
    "g1_gcd_identity_holds",
    "dirichlet_truncation_check",
    "tail_allowance",
    "density_report",
    "convergence_reports",
    "residual_trend_violations",
    "main_term_predictions",
]
