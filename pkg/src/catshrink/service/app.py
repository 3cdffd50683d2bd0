"""FastAPI application exposing the analysis modules.

Every endpoint is a thin adapter: validate the request, call the library,
return its numbers unchanged. Domain errors map to HTTP 400 with the
exception class name in the body.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..association import regularized_association
from ..bootstrap import BootstrapConfig, bootstrap_homogeneity, bootstrap_mcnemar
from ..errors import CatshrinkError
from ..estimators import (
    BetaPrior,
    BinomialSample,
    bayes_laplace,
    jeffreys,
    map_estimate,
    mle,
    posterior_mean_beta,
)
from ..hypotests import (
    TestReport,
    homogeneity_regularized,
    mcnemar_regularized,
    sign_regularized,
)
from ..mutual_info import mi_regularized, targets_from_matrix, uniform_targets
from ..table import new_table
from . import schemas

_LN2 = math.log(2.0)


def _test_response(kind: str, report: TestReport) -> schemas.TestResponse:
    return schemas.TestResponse(
        kind=kind,
        lam=report.lam,
        statistic=report.statistic,
        scaled_statistic=report.scaled_statistic,
        reference=report.reference.value,
        p_two_sided=report.p_two_sided,
        p_one_sided_upper=report.p_one_sided_upper,
        warnings=list(report.warnings),
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="catshrink",
        version=__version__,
        description=(
            "Shrinkage estimation and regularized inference for categorical data: "
            "binomial estimators under beta priors, lambda-regularized tests, "
            "association measures, mutual information, and parametric bootstrap."
        ),
    )

    @app.exception_handler(CatshrinkError)
    async def _domain_error(_: Request, exc: CatshrinkError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.exception_handler(ValueError)
    async def _value_error(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": "ValueError", "detail": str(exc)},
        )

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post(
        "/estimate",
        response_model=schemas.EstimateResponse,
        response_model_exclude_none=True,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def estimate(req: schemas.EstimateRequest) -> schemas.EstimateResponse:
        sample = BinomialSample(successes=req.x, trials=req.n)
        estimator = req.estimator
        if estimator is None:
            estimator = "beta" if req.prior_a is not None or req.prior_b is not None else "mle"
        out = schemas.EstimateResponse(estimator=estimator, x=req.x, n=req.n, estimate=0.0)
        if estimator == "mle":
            out.estimate = mle(sample)
        elif estimator == "bl":
            out.estimate = bayes_laplace(sample)
        elif estimator == "jeffreys":
            out.estimate = jeffreys(sample)
        else:
            if req.prior_a is None or req.prior_b is None:
                raise HTTPException(
                    status_code=422,
                    detail=f"estimator {estimator!r} requires prior_a and prior_b",
                )
            prior = BetaPrior(a=req.prior_a, b=req.prior_b)
            out.prior_a = prior.a
            out.prior_b = prior.b
            out.prior_advisory = prior.advisory
            if estimator == "beta":
                out.estimate = posterior_mean_beta(prior, sample)
            else:
                result = map_estimate(prior, sample)
                out.estimate = result.value
                out.boundary_mode = result.boundary_mode
                out.undefined_mode = result.undefined_mode
        return out

    @app.post(
        "/test",
        response_model=schemas.TestResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def run_test(req: schemas.TestRequest) -> schemas.TestResponse:
        if req.kind == "sign":
            if req.x is None or req.n is None:
                raise HTTPException(status_code=422, detail="sign test requires x and n")
            report = sign_regularized(
                BinomialSample(successes=req.x, trials=req.n), req.lam, req.pi0
            )
        else:
            if req.counts is None:
                raise HTTPException(status_code=422, detail=f"{req.kind} test requires counts")
            table = new_table(req.counts)
            if req.kind == "homogeneity":
                report = homogeneity_regularized(table, req.lam)
            else:
                report = mcnemar_regularized(table, req.lam, req.tau)
        return _test_response(req.kind, report)

    @app.post(
        "/assoc",
        response_model=schemas.AssociationResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def assoc(req: schemas.AssociationRequest) -> schemas.AssociationResponse:
        table = new_table(req.counts)
        report = regularized_association(table, req.lam)
        return schemas.AssociationResponse(
            lam=report.lam,
            n=table.n,
            z_star=report.z_star,
            pearson_c=report.pearson_c,
            phi=report.phi,
            cramers_v=report.cramers_v,
        )

    @app.post(
        "/mi",
        response_model=schemas.MutualInformationResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def mutual_information(req: schemas.MutualInformationRequest) -> schemas.MutualInformationResponse:
        table = new_table(req.counts)
        if req.targets is not None:
            targets = targets_from_matrix(req.targets)
        else:
            targets = uniform_targets(table.n_rows, table.n_cols)
        result = mi_regularized(table, req.lam, targets)
        return schemas.MutualInformationResponse(
            lam=result.lam,
            value_nats=result.value,
            value_bits=result.value / _LN2,
            cells_elided=result.cells_elided,
        )

    @app.post(
        "/bootstrap",
        response_model=schemas.BootstrapResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def bootstrap(req: schemas.BootstrapRequest) -> schemas.BootstrapResponse:
        table = new_table(req.counts)
        config = BootstrapConfig(seed=req.seed, replicates=req.replicates, alpha=req.alpha)
        if req.kind == "homogeneity":
            report = bootstrap_homogeneity(table, req.lam, config)
        else:
            report = bootstrap_mcnemar(table, req.lam, req.tau, config)
        return schemas.BootstrapResponse(
            kind=req.kind,
            lam=req.lam,
            replicates=report.replicates,
            seed=report.seed,
            alpha=req.alpha,
            rejection_rate=report.rejection_rate,
            empirical_quantiles={str(k): v for k, v in report.empirical_quantiles.items()},
        )

    return app


app = create_app()
