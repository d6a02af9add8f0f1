"""Asymptotic significance tests and association measures for 2x2 tables.

Covers Pearson's X^2, the likelihood-ratio G^2, the Yates continuity-adjusted
and Mantel-Haenszel chi-square variants, the one-sample bigram t-test, and
the special functions (chi-square and normal upper tails) that turn
statistics into p-values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateTableError, UndefinedStatisticError
from .tables import ContingencyTable2x2, expected_counts, small_expected_warning


@dataclass(frozen=True)
class TestResult:
    method: str  # one of: pearson, g2, yates, mantel_haenszel, t_test
    statistic: float
    df: int | None  # 1 for the chi-square family, None for the normal-limit t-test
    p_value: float
    small_expected: bool  # warning flag from the table's expected counts


@dataclass(frozen=True)
class AssociationMeasures:
    phi: float
    contingency_coefficient: float
    cramers_v: float  # signed; equals phi for 2x2 tables


def _lower_gamma_series(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x) by its power series (x < a + 1)."""
    term = 1.0 / a
    total = term
    ap = a
    for _ in range(500):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * 1e-16:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))

def _upper_gamma_cf(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) by continued fraction (x >= a + 1)."""
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-x + a * math.log(x) - math.lgamma(a))


def chi_square_sf(x: float, df: int) -> float:
    """Upper-tail probability P(chi^2_df >= x) via the regularized incomplete gamma."""
    if x < 0:
        raise ValueError(f"chi-square statistic must be nonnegative, got {x}")
    if df < 1:
        raise ValueError(f"degrees of freedom must be positive, got {df}")
    if x == 0:
        return 1.0
    a = df / 2.0
    half = x / 2.0
    if half < a + 1.0:
        return 1.0 - _lower_gamma_series(a, half)
    return _upper_gamma_cf(a, half)


def normal_sf(z: float) -> float:
    """Standard normal upper tail P(Z >= z), via the complementary error function."""
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def _checked_expected(table: ContingencyTable2x2):
    expected = expected_counts(table)
    if min(expected.cells) <= 0.0:
        raise DegenerateTableError(
            "degenerate table: a zero marginal gives a zero expected count"
        )
    return expected


def pearson_x2(table: ContingencyTable2x2) -> TestResult:
    """Pearson's X^2 = sum (observed - expected)^2 / expected."""
    expected = _checked_expected(table)
    stat = math.fsum(
        (n - m) ** 2 / m for n, m in zip(table.cells, expected.cells)
    )
    return TestResult("pearson", stat, 1, chi_square_sf(stat, 1),
                      small_expected_warning(expected).triggered)


def likelihood_g2(table: ContingencyTable2x2) -> TestResult:
    """Likelihood-ratio G^2 = 2 sum n ln(n/m); zero cells contribute zero (the limit)."""
    expected = _checked_expected(table)
    stat = 2.0 * math.fsum(
        n * math.log(n / m) for n, m in zip(table.cells, expected.cells) if n > 0
    )
    stat = max(0.0, stat)
    return TestResult("g2", stat, 1, chi_square_sf(stat, 1),
                      small_expected_warning(expected).triggered)


def yates_x2(table: ContingencyTable2x2) -> TestResult:
    """Continuity-adjusted X^2: each |n - m| shrunk by 0.5 (clamped at 0) before squaring."""
    expected = _checked_expected(table)
    stat = math.fsum(
        max(0.0, abs(n - m) - 0.5) ** 2 / m for n, m in zip(table.cells, expected.cells)
    )
    return TestResult("yates", stat, 1, chi_square_sf(stat, 1),
                      small_expected_warning(expected).triggered)


def mantel_haenszel_x2(table: ContingencyTable2x2) -> TestResult:
    """Mantel-Haenszel chi-square: (n - 1)/n times Pearson's X^2."""
    pearson = pearson_x2(table)
    n = table.total
    if n < 2:
        raise DegenerateTableError("Mantel-Haenszel requires a sample size of at least 2")
    stat = (n - 1) / n * pearson.statistic
    return TestResult("mantel_haenszel", stat, 1, chi_square_sf(stat, 1),
                      pearson.small_expected)


def t_test(table: ContingencyTable2x2) -> TestResult:
    """One-sample t-statistic for bigram data, (n11 - m11)/sqrt(n11).

    The sample variance is approximated by the bigram's relative frequency, so
    the statistic is undefined when n11 = 0. Significance is the one-sided
    upper tail of the standard normal (the statistic's large-sample limit).
    """
    if table.n11 == 0:
        raise UndefinedStatisticError("t-statistic undefined: n11 = 0")
    expected = expected_counts(table)
    stat = (table.n11 - expected.m11) / math.sqrt(table.n11)
    return TestResult("t_test", stat, None, normal_sf(stat),
                      small_expected_warning(expected).triggered)


def association_measures(table: ContingencyTable2x2) -> AssociationMeasures:
    """Phi, the contingency coefficient, and signed Cramer's V."""
    if min(table.row1, table.row2, table.col1, table.col2) == 0:
        raise DegenerateTableError("degenerate table: a marginal total is zero")
    denom = math.sqrt(table.row1) * math.sqrt(table.row2) * math.sqrt(table.col1) * math.sqrt(table.col2)
    phi = (table.n11 * table.n22 - table.n12 * table.n21) / denom
    x2 = pearson_x2(table).statistic
    cc = math.sqrt(x2 / (x2 + table.total))
    return AssociationMeasures(phi=phi, contingency_coefficient=cc, cramers_v=phi)
