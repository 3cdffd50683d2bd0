"""Shrinkage estimation and regularized inference for categorical data."""

from .association import (
    AssociationReport,
    cramers_v,
    pearson_c,
    phi_coefficient,
    regularized_association,
)
from .bootstrap import (
    QUANTILE_LEVELS,
    BootstrapConfig,
    BootstrapReport,
    bootstrap_homogeneity,
    bootstrap_mcnemar,
)
from .errors import (
    CatshrinkError,
    DegenerateMarginError,
    DimensionMismatchError,
    EmptyTableError,
    HypothesisViolatedError,
    InsufficientReplicatesError,
    InvalidDimsError,
    NegativeCellError,
    NoDiscordantPairsError,
    ParseError,
    ZeroLambdaError,
    ZeroMarginError,
    ZeroTotalError,
)
from .estimators import (
    BetaPrior,
    BinomialSample,
    MapEstimate,
    ShrinkageConfig,
    bayes_laplace,
    decompose_shrinkage,
    jeffreys,
    map_estimate,
    mle,
    posterior_beta,
    posterior_mean_beta,
    shrink,
)
from .hypotests import (
    ReferenceDistribution,
    TestReport,
    homogeneity_regularized,
    homogeneity_z,
    mcnemar_regularized,
    mcnemar_t,
    sign_regularized,
    sign_statistic,
    std_normal_cdf,
    std_normal_quantile,
)
from .mutual_info import (
    MIResult,
    MITargetSpec,
    mi_mle,
    mi_regularized,
    targets_from_matrix,
    uniform_targets,
    verify_zero_elision,
)
from .table import (
    ContingencyTable,
    ProbTable,
    drop_empty_margins,
    mle_probs,
    new_table,
    parse_table,
)

__version__ = "0.1.0"

__all__ = [
    "AssociationReport",
    "BetaPrior",
    "BinomialSample",
    "BootstrapConfig",
    "BootstrapReport",
    "CatshrinkError",
    "ContingencyTable",
    "DegenerateMarginError",
    "DimensionMismatchError",
    "EmptyTableError",
    "HypothesisViolatedError",
    "InsufficientReplicatesError",
    "InvalidDimsError",
    "MapEstimate",
    "MIResult",
    "MITargetSpec",
    "NegativeCellError",
    "NoDiscordantPairsError",
    "ParseError",
    "ProbTable",
    "QUANTILE_LEVELS",
    "ReferenceDistribution",
    "ShrinkageConfig",
    "TestReport",
    "ZeroLambdaError",
    "ZeroMarginError",
    "ZeroTotalError",
    "bayes_laplace",
    "bootstrap_homogeneity",
    "bootstrap_mcnemar",
    "cramers_v",
    "decompose_shrinkage",
    "drop_empty_margins",
    "homogeneity_regularized",
    "homogeneity_z",
    "jeffreys",
    "map_estimate",
    "mcnemar_regularized",
    "mcnemar_t",
    "mi_mle",
    "mi_regularized",
    "mle",
    "mle_probs",
    "new_table",
    "parse_table",
    "pearson_c",
    "phi_coefficient",
    "posterior_beta",
    "posterior_mean_beta",
    "regularized_association",
    "shrink",
    "sign_regularized",
    "sign_statistic",
    "std_normal_cdf",
    "std_normal_quantile",
    "targets_from_matrix",
    "uniform_targets",
    "verify_zero_elision",
]
