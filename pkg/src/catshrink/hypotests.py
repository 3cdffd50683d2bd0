"""Sign, homogeneity, and McNemar tests with lambda-regularized variants.

Each regularized statistic replaces the cell proportions by shrunken
estimates ``lam * phat + (1 - lam) * target``. The resulting statistic is
exactly ``lam`` times its classical counterpart whenever the shrinkage
target is null-consistent, so dividing by ``lam`` restores the standard
normal reference distribution. Reports therefore carry both the raw
regularized statistic and the lambda-scaled one, with p-values computed
from the scaled value.

Conventions for the 2x2 table::

    [[n11, n12],
     [n21, n22]]

Homogeneity treats the two columns as independent binomial groups with
success counts in the first row. McNemar treats the whole table as one
multinomial sample and compares the off-diagonal (discordant) cells.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import (
    DegenerateMarginError,
    InvalidDimsError,
    NoDiscordantPairsError,
    ZeroLambdaError,
)
from .estimators import BinomialSample
from .table import ContingencyTable

_SQRT2 = math.sqrt(2.0)


class ReferenceDistribution(enum.Enum):
    """Asymptotic null distribution a report's scaled statistic refers to."""

    STD_NORMAL = "std_normal"
    CHI_SQ_1 = "chi_sq_1"


@dataclass(frozen=True)
class TestReport:
    """Outcome of a regularized test.

    ``scaled_statistic`` is ``statistic / lam`` exactly and is the quantity
    compared against the reference distribution. ``warnings`` lists
    conditions under which the stated reference is not guaranteed (e.g. a
    sign-test shrinkage target away from the null value).
    """

    statistic: float
    scaled_statistic: float
    lam: float
    reference: ReferenceDistribution
    p_two_sided: float
    p_one_sided_upper: float
    warnings: tuple[str, ...] = field(default=())


def std_normal_cdf(z: float) -> float:
    """Standard normal distribution function, accurate to ~1 ulp."""
    return 0.5 * math.erfc(-z / _SQRT2)


def std_normal_sf(z: float) -> float:
    """Upper tail probability P(N(0,1) >= z), accurate deep into the tail."""
    return 0.5 * math.erfc(z / _SQRT2)


def std_normal_quantile(p: float) -> float:
    """Inverse of :func:`std_normal_cdf` by bisection on [-40, 40]."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"quantile level must lie in (0, 1), got {p}")
    lo, hi = -40.0, 40.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if std_normal_cdf(mid) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(1.0, abs(lo)):
            break
    return 0.5 * (lo + hi)


def _check_lambda(lam: float) -> None:
    if lam == 0:
        raise ZeroLambdaError("lambda is zero; the scaled statistic is undefined")
    if not 0.0 < lam <= 1.0:
        raise ValueError(f"lambda must lie in (0, 1], got {lam}")


def _report(
    statistic: float,
    lam: float,
    reference: ReferenceDistribution = ReferenceDistribution.STD_NORMAL,
    warnings: tuple[str, ...] = (),
) -> TestReport:
    scaled = statistic / lam
    return TestReport(
        statistic=statistic,
        scaled_statistic=scaled,
        lam=lam,
        reference=reference,
        p_two_sided=2.0 * std_normal_sf(abs(scaled)),
        p_one_sided_upper=std_normal_sf(scaled),
        warnings=warnings,
    )


def _require_2x2(table: ContingencyTable) -> None:
    if table.shape != (2, 2):
        raise InvalidDimsError(f"expected a 2x2 table, got {table.n_rows}x{table.n_cols}")


def _require_positive_margins(table: ContingencyTable) -> None:
    if min(table.row_totals()) == 0 or min(table.col_totals()) == 0:
        raise DegenerateMarginError("every row and column total must be positive")


def sign_statistic(sample: BinomialSample) -> float:
    """Sign test statistic 2*sqrt(n)*(x/n - 1/2) for H0: success rate 1/2."""
    if sample.trials < 1:
        raise ValueError("sign test requires at least one trial")
    n = sample.trials
    return 2.0 * math.sqrt(n) * (sample.successes / n - 0.5)


def sign_regularized(sample: BinomialSample, lam: float, pi0: float = 0.5) -> TestReport:
    """Sign test on the shrunken proportion lam*(x/n) + (1-lam)*pi0.

    With ``pi0 = 1/2`` the statistic equals ``lam`` times the classical one,
    so the scaled statistic keeps the N(0,1) null. Any other ``pi0`` injects
    drift under H0; the report then carries a ``CalibrationWarning``.
    """
    _check_lambda(lam)
    if not 0.0 <= pi0 <= 1.0:
        raise ValueError(f"pi0 must lie in [0, 1], got {pi0}")
    if sample.trials < 1:
        raise ValueError("sign test requires at least one trial")
    n = sample.trials
    shrunk = lam * (sample.successes / n) + (1.0 - lam) * pi0
    statistic = 2.0 * math.sqrt(n) * (shrunk - 0.5)
    warnings = () if pi0 == 0.5 else ("CalibrationWarning",)
    return _report(statistic, lam, warnings=warnings)


def homogeneity_z(table: ContingencyTable) -> float:
    """Signed two-proportion statistic whose square is the Pearson chi-square.

    Z = (phat2 - phat1) * sqrt(n * m1 * m2 / (r1 * r2)) where phat_j is the
    first-row proportion within column j, m_j the column totals, and r_i the
    row totals. Requires all four margins positive.
    """
    _require_2x2(table)
    _require_positive_margins(table)
    (n11, n12), (n21, n22) = table.counts
    m1, m2 = n11 + n21, n12 + n22
    r1, r2 = n11 + n12, n21 + n22
    n = table.n
    p1 = n11 / m1
    p2 = n12 / m2
    return (p2 - p1) * math.sqrt(n * m1 * m2 / (r1 * r2))


def homogeneity_regularized(table: ContingencyTable, lam: float) -> TestReport:
    """Homogeneity test with both group proportions shrunk to the pooled rate.

    The shrunken estimates are ``lam * n1j/mj + (1 - lam) * r1/n``; the
    pooled-rate target cancels in their difference, so the statistic equals
    ``lam`` times the classical Z and the scaled statistic is N(0,1) under
    the null.
    """
    _check_lambda(lam)
    _require_2x2(table)
    _require_positive_margins(table)
    (n11, n12), (n21, n22) = table.counts
    m1, m2 = n11 + n21, n12 + n22
    r1, r2 = n11 + n12, n21 + n22
    n = table.n
    pooled = r1 / n
    p1 = lam * (n11 / m1) + (1.0 - lam) * pooled
    p2 = lam * (n12 / m2) + (1.0 - lam) * pooled
    statistic = (p2 - p1) * math.sqrt(n * m1 * m2 / (r1 * r2))
    return _report(statistic, lam)


def mcnemar_t(table: ContingencyTable) -> float:
    """McNemar symmetry statistic (n12 - n21) / sqrt(n12 + n21)."""
    _require_2x2(table)
    n12 = table.counts[0][1]
    n21 = table.counts[1][0]
    if n12 + n21 == 0:
        raise NoDiscordantPairsError("both discordant cells are zero")
    n = table.n
    return n * (n12 / n - n21 / n) / math.sqrt(n12 + n21)


def mcnemar_regularized(table: ContingencyTable, lam: float, tau: float = 0.5) -> TestReport:
    """McNemar test with both discordant proportions shrunk toward ``tau``.

    The common target cancels in the difference, so the statistic equals
    ``lam`` times the classical one for every ``tau``.
    """
    _check_lambda(lam)
    _require_2x2(table)
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    n12 = table.counts[0][1]
    n21 = table.counts[1][0]
    if n12 + n21 == 0:
        raise NoDiscordantPairsError("both discordant cells are zero")
    n = table.n
    p12 = lam * (n12 / n) + (1.0 - lam) * tau
    p21 = lam * (n21 / n) + (1.0 - lam) * tau
    statistic = n * (p12 - p21) / math.sqrt(n12 + n21)
    return _report(statistic, lam)
