"""Regularized empirical mutual information for two-way tables.

The regularized cell probabilities are ``lam * phat_ij + (1 - lam) * t_ij``
for a target matrix ``t`` whose row sums ``zeta`` and column sums ``eta``
shrink the margins consistently. Values are in nats. Cells whose
regularized probability is zero contribute nothing (the 0*log(0) = 0
convention); in particular a zero count with a zero target can be skipped
without changing the result, which :func:`verify_zero_elision` checks as an
exact numerical identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    HypothesisViolatedError,
    ZeroMarginError,
)
from .table import ContingencyTable

_MARGIN_TOL = 1e-12


@dataclass(frozen=True)
class MITargetSpec:
    """Shrinkage target matrix ``t`` with its margin vectors.

    Invariants (all within 1e-12): every ``t[i][j]`` in [0, 1); row sums
    equal ``zeta``; column sums equal ``eta``; the grand total is 1.
    """

    t: tuple[tuple[float, ...], ...]
    zeta: tuple[float, ...]
    eta: tuple[float, ...]

    def __post_init__(self) -> None:
        n_rows = len(self.t)
        if n_rows == 0 or len(self.t[0]) == 0:
            raise ValueError("target matrix must be nonempty")
        n_cols = len(self.t[0])
        if any(len(row) != n_cols for row in self.t):
            raise ValueError("target matrix must be rectangular")
        if len(self.zeta) != n_rows or len(self.eta) != n_cols:
            raise ValueError("margin vectors must match the target matrix shape")
        for i, row in enumerate(self.t):
            for j, value in enumerate(row):
                if not 0.0 <= value < 1.0:
                    raise ValueError(f"target cell [{i}][{j}] must lie in [0, 1), got {value}")
        if any(z < 0 for z in self.zeta) or any(e < 0 for e in self.eta):
            raise ValueError("margin targets must be nonnegative")
        for i, row in enumerate(self.t):
            if abs(math.fsum(row) - self.zeta[i]) > _MARGIN_TOL:
                raise ValueError(f"row {i} of targets does not sum to zeta[{i}]")
        for j in range(n_cols):
            col = math.fsum(row[j] for row in self.t)
            if abs(col - self.eta[j]) > _MARGIN_TOL:
                raise ValueError(f"column {j} of targets does not sum to eta[{j}]")
        total = math.fsum(value for row in self.t for value in row)
        if abs(total - 1.0) > _MARGIN_TOL:
            raise ValueError(f"targets must sum to 1, got {total!r}")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.t), len(self.t[0]))


@dataclass(frozen=True)
class MIResult:
    """Mutual information value in nats with the lambda used.

    ``cells_elided`` counts the cells skipped because their regularized
    probability is zero.
    """

    value: float
    lam: float
    cells_elided: int


def uniform_targets(n_rows: int, n_cols: int) -> MITargetSpec:
    """Maximum-entropy target: every cell 1/(I*J), margins 1/I and 1/J."""
    if n_rows < 1 or n_cols < 1:
        raise ValueError("table dimensions must be positive")
    cell = 1.0 / (n_rows * n_cols)
    return MITargetSpec(
        t=tuple(tuple(cell for _ in range(n_cols)) for _ in range(n_rows)),
        zeta=tuple(1.0 / n_rows for _ in range(n_rows)),
        eta=tuple(1.0 / n_cols for _ in range(n_cols)),
    )


def targets_from_matrix(matrix: Sequence[Sequence[float]]) -> MITargetSpec:
    """Build a target spec from a matrix, deriving the margin vectors."""
    t = tuple(tuple(float(v) for v in row) for row in matrix)
    if not t or not t[0]:
        raise ValueError("target matrix must be nonempty")
    zeta = tuple(math.fsum(row) for row in t)
    eta = tuple(math.fsum(row[j] for row in t) for j in range(len(t[0])))
    return MITargetSpec(t=t, zeta=zeta, eta=eta)


def mi_mle(table: ContingencyTable) -> float:
    """Plug-in mutual information of the cell relative frequencies, in nats.

    Zero cells are skipped (0*log(0) = 0); zero margins only occur alongside
    all-zero rows or columns, which contribute nothing.
    """
    n = table.n
    row_p = [t / n for t in table.row_totals()]
    col_p = [t / n for t in table.col_totals()]
    terms = []
    for i, row in enumerate(table.counts):
        for j, count in enumerate(row):
            if count == 0:
                continue
            p = count / n
            terms.append(p * (math.log(p) - math.log(row_p[i]) - math.log(col_p[j])))
    return math.fsum(terms)


def _check_targets_match(table: ContingencyTable, targets: MITargetSpec) -> None:
    if targets.shape != table.shape:
        raise DimensionMismatchError(
            f"targets have shape {targets.shape}, table has shape {table.shape}"
        )


def mi_regularized(table: ContingencyTable, lam: float, targets: MITargetSpec) -> MIResult:
    """Mutual information of the shrunken joint distribution, in nats.

    At ``lam = 1`` this is exactly :func:`mi_mle`; at ``lam = 0`` it is the
    mutual information of the target distribution itself. Raises
    ``ZeroMarginError`` if any regularized row or column margin vanishes.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    _check_targets_match(table, targets)
    n = table.n
    row_margin = [
        lam * (t / n) + (1.0 - lam) * z for t, z in zip(table.row_totals(), targets.zeta)
    ]
    col_margin = [
        lam * (t / n) + (1.0 - lam) * e for t, e in zip(table.col_totals(), targets.eta)
    ]
    for i, r in enumerate(row_margin):
        if r <= 0.0:
            raise ZeroMarginError(f"regularized row margin {i} is zero")
    for j, c in enumerate(col_margin):
        if c <= 0.0:
            raise ZeroMarginError(f"regularized column margin {j} is zero")
    log_row = [math.log(r) for r in row_margin]
    log_col = [math.log(c) for c in col_margin]
    terms = []
    elided = 0
    for i, row in enumerate(table.counts):
        for j, count in enumerate(row):
            p = lam * (count / n) + (1.0 - lam) * targets.t[i][j]
            if p == 0.0:
                elided += 1
                continue
            terms.append(p * (math.log(p) - log_row[i] - log_col[j]))
    return MIResult(value=math.fsum(terms), lam=lam, cells_elided=elided)


def verify_zero_elision(table: ContingencyTable, lam: float, targets: MITargetSpec) -> bool:
    """Check that skipping zero-count cells leaves the value unchanged.

    Requires strictly positive observed margins and a zero target wherever
    the count is zero; violations raise ``HypothesisViolatedError``. Returns
    True when the all-cells evaluation (with 0*log(0) = 0) agrees with the
    evaluation restricted to nonzero counts, to 1e-12.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    _check_targets_match(table, targets)
    if min(table.row_totals()) == 0 or min(table.col_totals()) == 0:
        raise HypothesisViolatedError("observed row and column margins must be positive")
    for i, row in enumerate(table.counts):
        for j, count in enumerate(row):
            if count == 0 and targets.t[i][j] > 0.0:
                raise HypothesisViolatedError(
                    f"target at zero-count cell [{i}][{j}] must be zero"
                )
    n = table.n
    row_margin = [
        lam * (t / n) + (1.0 - lam) * z for t, z in zip(table.row_totals(), targets.zeta)
    ]
    col_margin = [
        lam * (t / n) + (1.0 - lam) * e for t, e in zip(table.col_totals(), targets.eta)
    ]
    if min(row_margin) <= 0.0 or min(col_margin) <= 0.0:
        raise ZeroMarginError("a regularized margin is zero")
    log_row = [math.log(r) for r in row_margin]
    log_col = [math.log(c) for c in col_margin]

    def cell_term(i: int, j: int) -> float:
        p = lam * (table.counts[i][j] / n) + (1.0 - lam) * targets.t[i][j]
        if p == 0.0:
            return 0.0
        return p * (math.log(p) - log_row[i] - log_col[j])

    full = math.fsum(
        cell_term(i, j) for i in range(table.n_rows) for j in range(table.n_cols)
    )
    restricted = math.fsum(
        cell_term(i, j)
        for i in range(table.n_rows)
        for j in range(table.n_cols)
        if table.counts[i][j] > 0
    )
    return abs(full - restricted) <= 1e-12
