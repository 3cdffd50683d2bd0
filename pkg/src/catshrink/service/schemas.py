"""Request and response models for the HTTP service.

The regularization weight travels as ``lambda`` on the wire (a Python
keyword, hence the ``lam`` field name with an alias).
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

Counts = list[list[int]]


class HealthResponse(BaseModel):
    status: str
    version: str


class EstimateRequest(BaseModel):
    x: int = Field(ge=0, description="number of successes")
    n: int = Field(ge=1, description="number of trials")
    estimator: Literal["mle", "beta", "bl", "jeffreys", "map"] | None = None
    prior_a: float | None = Field(None, gt=0)
    prior_b: float | None = Field(None, gt=0)


class EstimateResponse(BaseModel):
    estimator: str
    x: int
    n: int
    estimate: float
    prior_a: float | None = None
    prior_b: float | None = None
    prior_advisory: bool | None = None
    boundary_mode: bool | None = None
    undefined_mode: bool | None = None


class TestRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: Literal["sign", "homogeneity", "mcnemar"]
    lam: float = Field(1.0, alias="lambda", gt=0, le=1)
    counts: Counts | None = None
    x: int | None = Field(None, ge=0, description="successes (sign test)")
    n: int | None = Field(None, ge=1, description="trials (sign test)")
    pi0: float = Field(0.5, ge=0, le=1)
    tau: float = Field(0.5, ge=0, le=1)


class TestResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: str
    lam: float = Field(alias="lambda")
    statistic: float
    scaled_statistic: float
    reference: str
    p_two_sided: float
    p_one_sided_upper: float
    warnings: list[str]


class AssociationRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    counts: Counts
    lam: float = Field(1.0, alias="lambda", gt=0, le=1)


class AssociationResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(alias="lambda")
    n: int
    z_star: float
    pearson_c: float
    phi: float
    cramers_v: float


class MutualInformationRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    counts: Counts
    lam: float = Field(1.0, alias="lambda", ge=0, le=1)
    targets: list[list[float]] | None = None


class MutualInformationResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(alias="lambda")
    value_nats: float
    value_bits: float
    cells_elided: int


class BootstrapRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    counts: Counts
    kind: Literal["homogeneity", "mcnemar"]
    lam: float = Field(1.0, alias="lambda", gt=0, le=1)
    tau: float = Field(0.5, ge=0, le=1)
    replicates: int = Field(10_000, ge=1)
    seed: int = Field(ge=0)
    alpha: float = Field(0.05, gt=0, lt=1)


class BootstrapResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: str
    lam: float = Field(alias="lambda")
    replicates: int
    seed: int
    alpha: float
    rejection_rate: float
    empirical_quantiles: dict[str, float]


class ErrorResponse(BaseModel):
    error: str
    detail: str
