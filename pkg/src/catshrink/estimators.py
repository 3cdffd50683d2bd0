"""Binomial proportion estimators: MLE and beta-prior shrinkage variants.

Every Bayesian posterior mean here is a convex combination of the sample
proportion and the prior mean,

    lam * (x / n) + (1 - lam) * target,

with ``lam = n / (n + a + b)`` and ``target = a / (a + b)`` for a
``Beta(a, b)`` prior. :func:`decompose_shrinkage` recovers that pair so the
generic :func:`shrink` reproduces :func:`posterior_mean_beta` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BetaPrior:
    """Beta(a, b) prior for a Bernoulli success probability."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a > 0 and self.b > 0):
            raise ValueError(f"prior parameters must be positive, got a={self.a}, b={self.b}")

    @property
    def mean(self) -> float:
        return self.a / (self.a + self.b)

    @property
    def advisory(self) -> bool:
        """True when a < 1 or b < 1: the posterior can pile its mode onto a boundary."""
        return self.a < 1 or self.b < 1


@dataclass(frozen=True)
class BinomialSample:
    """``successes`` hits out of ``trials`` Bernoulli draws.

    ``trials = 0`` is permitted so a conjugate update with no data returns
    the prior; operations that need data (``mle``, ``shrink``) reject it.
    """

    successes: int
    trials: int

    def __post_init__(self) -> None:
        if self.trials < 0:
            raise ValueError(f"trials must be nonnegative, got {self.trials}")
        if not (0 <= self.successes <= self.trials):
            raise ValueError(
                f"successes must lie in [0, trials], got {self.successes} of {self.trials}"
            )


@dataclass(frozen=True)
class ShrinkageConfig:
    """Weight ``lam`` on the data estimate and the value shrunk toward."""

    lam: float
    target: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError(f"lam must lie in [0, 1], got {self.lam}")
        if not 0.0 <= self.target <= 1.0:
            raise ValueError(f"target must lie in [0, 1], got {self.target}")


@dataclass(frozen=True)
class MapEstimate:
    """Posterior mode with flags for the non-interior cases.

    ``boundary_mode`` is set when a posterior shape parameter is <= 1, so the
    mode sits on 0 or 1 (or on both, for U-shaped posteriors).
    ``undefined_mode`` is set when the mode is not unique; the value is then
    a conventional representative (0.5 for the flat posterior).
    """

    value: float
    boundary_mode: bool = False
    undefined_mode: bool = False


def mle(sample: BinomialSample) -> float:
    """Sample proportion x/n. Requires at least one trial."""
    if sample.trials == 0:
        raise ValueError("mle undefined for a sample with zero trials")
    return sample.successes / sample.trials


def shrink(sample: BinomialSample, config: ShrinkageConfig) -> float:
    """Convex combination lam * (x/n) + (1 - lam) * target."""
    return config.lam * mle(sample) + (1.0 - config.lam) * config.target


def posterior_beta(prior: BetaPrior, sample: BinomialSample) -> BetaPrior:
    """Conjugate update: Beta(a, b) -> Beta(a + x, b + n - x)."""
    return BetaPrior(
        a=prior.a + sample.successes,
        b=prior.b + (sample.trials - sample.successes),
    )


def posterior_mean_beta(prior: BetaPrior, sample: BinomialSample) -> float:
    """Posterior mean (x + a) / (n + a + b)."""
    return (sample.successes + prior.a) / (sample.trials + prior.a + prior.b)


def bayes_laplace(sample: BinomialSample) -> float:
    """Posterior mean under the uniform Beta(1, 1) prior: (x + 1) / (n + 2)."""
    return (sample.successes + 1.0) / (sample.trials + 2.0)


def jeffreys(sample: BinomialSample) -> float:
    """Posterior mean under the Beta(1/2, 1/2) prior: (x + 1/2) / (n + 1)."""
    return (sample.successes + 0.5) / (sample.trials + 1.0)


def map_estimate(prior: BetaPrior, sample: BinomialSample) -> MapEstimate:
    """Mode of the posterior Beta(a + x, b + n - x).

    Interior mode (alpha - 1) / (alpha + beta - 2) when both posterior shape
    parameters exceed 1. Monotone posteriors put the mode on a boundary;
    the flat Beta(1, 1) posterior has no unique mode and reports 0.5 with
    ``undefined_mode``. U-shaped posteriors (both shapes below 1) diverge at
    both boundaries; the side with the stronger divergence is reported, and
    the symmetric tie reports 0.5 with ``undefined_mode``.
    """
    alpha = prior.a + sample.successes
    beta = prior.b + (sample.trials - sample.successes)
    if alpha > 1 and beta > 1:
        return MapEstimate(value=(alpha - 1.0) / (alpha + beta - 2.0))
    if alpha == 1 and beta == 1:
        return MapEstimate(value=0.5, undefined_mode=True)
    if alpha < 1 and beta < 1:
        if alpha == beta:
            return MapEstimate(value=0.5, boundary_mode=True, undefined_mode=True)
        return MapEstimate(value=0.0 if alpha < beta else 1.0, boundary_mode=True)
    if alpha <= 1:
        return MapEstimate(value=0.0, boundary_mode=True)
    return MapEstimate(value=1.0, boundary_mode=True)


def decompose_shrinkage(prior: BetaPrior, trials: int) -> ShrinkageConfig:
    """Express the beta posterior mean as a shrinkage of the MLE.

    Returns lam = n / (n + a + b) and target = a / (a + b); ``shrink`` with
    this config equals ``posterior_mean_beta`` for every number of successes.
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    denom = trials + prior.a + prior.b
    return ShrinkageConfig(lam=trials / denom, target=prior.mean)
