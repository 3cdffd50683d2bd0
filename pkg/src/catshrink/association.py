"""Association measures for contingency tables, classical and regularized.

All three measures are monotone transforms of the squared homogeneity
statistic, so the regularized versions inherit its order preservation:
scaling Z by lambda never reorders two tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidDimsError
from .hypotests import homogeneity_regularized
from .table import ContingencyTable


@dataclass(frozen=True)
class AssociationReport:
    """Regularized association measures of a 2x2 table at a given lambda."""

    pearson_c: float
    phi: float
    cramers_v: float
    lam: float
    z_star: float


def pearson_c(z: float, n: int) -> float:
    """Pearson contingency coefficient sqrt(z^2 / (z^2 + n)), in [0, 1)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    z2 = z * z
    return math.sqrt(z2 / (z2 + n))


def phi_coefficient(z: float, n: int) -> float:
    """Phi coefficient sqrt(z^2 / n); unsigned."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return math.sqrt(z * z / n)


def cramers_v(z: float, n: int, n_rows: int, n_cols: int) -> float:
    """Cramer's V sqrt(z^2 / (n * (min(I, J) - 1))); equals phi for 2x2."""
    if n_rows < 2 or n_cols < 2:
        raise InvalidDimsError(
            f"Cramer's V needs at least 2 rows and 2 columns, got {n_rows}x{n_cols}"
        )
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    q = min(n_rows, n_cols)
    return math.sqrt(z * z / (n * (q - 1)))


def regularized_association(table: ContingencyTable, lam: float) -> AssociationReport:
    """All three measures evaluated on the regularized statistic Z*(lambda)."""
    z_star = homogeneity_regularized(table, lam).statistic
    n = table.n
    return AssociationReport(
        pearson_c=pearson_c(z_star, n),
        phi=phi_coefficient(z_star, n),
        cramers_v=cramers_v(z_star, n, 2, 2),
        lam=lam,
        z_star=z_star,
    )
