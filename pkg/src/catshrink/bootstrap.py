"""Parametric bootstrap under shrunken null probabilities.

Resampling schemes match the sampling model of each test: the homogeneity
bootstrap conditions on the observed column totals and draws two binomials
with the pooled success rate (the pooled rate is its own shrinkage target,
so lambda only rescales the statistic, not the null model); the McNemar
bootstrap draws one multinomial of size n from the shrunken cell estimates
with the discordant pair symmetrized and the vector renormalized.

Determinism contract: replicate k always consumes its own counter-based
Philox stream keyed by (seed, k), so serial and parallel execution orders
produce bit-identical reports. Empirical quantiles use the inverted-CDF
(type-1) definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import (
    DegenerateMarginError,
    InsufficientReplicatesError,
    NoDiscordantPairsError,
)
from .hypotests import (
    _check_lambda,
    _require_2x2,
    _require_positive_margins,
    homogeneity_regularized,
    mcnemar_regularized,
    std_normal_quantile,
)
from .table import ContingencyTable, new_table

QUANTILE_LEVELS = (0.005, 0.025, 0.05, 0.95, 0.975, 0.995)

_MIN_REPLICATES = 100


@dataclass(frozen=True)
class BootstrapConfig:
    """Replicate count, RNG seed, and nominal test level."""

    seed: int
    replicates: int = 10_000
    alpha: float = 0.05

    def __post_init__(self) -> None:
        if self.replicates < _MIN_REPLICATES:
            raise InsufficientReplicatesError(
                f"need at least {_MIN_REPLICATES} replicates, got {self.replicates}"
            )
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a nonnegative 64-bit integer")


@dataclass(frozen=True)
class BootstrapReport:
    """Null distribution summary of the scaled statistic.

    ``empirical_quantiles`` maps each level of :data:`QUANTILE_LEVELS` to the
    type-1 empirical quantile; ``rejection_rate`` is the fraction of
    replicates whose scaled statistic exceeds the asymptotic two-sided
    cutoff at the configured alpha.
    """

    empirical_quantiles: Mapping[float, float]
    rejection_rate: float
    replicates: int
    seed: int


def _replicate_stream(seed: int, index: int) -> np.random.Generator:
    # Streams are spaced 2^128 counter blocks apart: far beyond what one
    # replicate can consume, so they never overlap.
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, index, 0]))


def _summarize(stats: np.ndarray, config: BootstrapConfig) -> BootstrapReport:
    cutoff = std_normal_quantile(1.0 - config.alpha / 2.0)
    quantiles = np.quantile(stats, QUANTILE_LEVELS, method="inverted_cdf")
    return BootstrapReport(
        empirical_quantiles={
            level: float(q) for level, q in zip(QUANTILE_LEVELS, quantiles)
        },
        rejection_rate=float(np.mean(np.abs(stats) > cutoff)),
        replicates=config.replicates,
        seed=config.seed,
    )


def bootstrap_homogeneity(
    table: ContingencyTable, lam: float, config: BootstrapConfig
) -> BootstrapReport:
    """Bootstrap null distribution of the scaled homogeneity statistic.

    Column totals are held fixed; both columns draw successes from a
    binomial with the pooled first-row rate. Replicates whose table has a
    degenerate margin (possible for tiny tables) contribute a statistic of
    0, the no-evidence limit.
    """
    _check_lambda(lam)
    _require_2x2(table)
    _require_positive_margins(table)
    m1, m2 = table.col_totals()
    pooled = table.row_totals()[0] / table.n
    stats = np.empty(config.replicates)
    for k in range(config.replicates):
        rng = _replicate_stream(config.seed, k)
        x1 = int(rng.binomial(m1, pooled))
        x2 = int(rng.binomial(m2, pooled))
        replicate = new_table([[x1, x2], [m1 - x1, m2 - x2]])
        try:
            stats[k] = homogeneity_regularized(replicate, lam).scaled_statistic
        except DegenerateMarginError:
            stats[k] = 0.0
    return _summarize(stats, config)


def bootstrap_mcnemar(
    table: ContingencyTable, lam: float, tau: float, config: BootstrapConfig
) -> BootstrapReport:
    """Bootstrap null distribution of the scaled McNemar statistic.

    The null cell probabilities are the shrunken estimates
    ``lam * phat_ij + (1 - lam) * tau`` with the two discordant cells
    replaced by their average and the four-vector renormalized; each
    replicate is one multinomial draw of size n. Replicates with no
    discordant pairs contribute a statistic of 0.
    """
    _check_lambda(lam)
    _require_2x2(table)
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    (n11, n12), (n21, n22) = table.counts
    if n12 + n21 == 0:
        raise NoDiscordantPairsError("both discordant cells are zero")
    n = table.n
    shrunk = [lam * (c / n) + (1.0 - lam) * tau for c in (n11, n12, n21, n22)]
    discordant_mean = 0.5 * (shrunk[1] + shrunk[2])
    null_probs = np.array([shrunk[0], discordant_mean, discordant_mean, shrunk[3]])
    null_probs /= null_probs.sum()
    stats = np.empty(config.replicates)
    for k in range(config.replicates):
        rng = _replicate_stream(config.seed, k)
        draw = rng.multinomial(n, null_probs)
        replicate = new_table([[int(draw[0]), int(draw[1])], [int(draw[2]), int(draw[3])]])
        try:
            stats[k] = mcnemar_regularized(replicate, lam, tau).scaled_statistic
        except NoDiscordantPairsError:
            stats[k] = 0.0
    return _summarize(stats, config)
