"""Tests for the HTTP service: endpoints mirror the library bit for bit."""

from __future__ import annotations

import math

import pytest
from fastapi.testclient import TestClient

from catshrink import (
    BetaPrior,
    BinomialSample,
    BootstrapConfig,
    bootstrap_homogeneity,
    homogeneity_regularized,
    mi_regularized,
    new_table,
    posterior_mean_beta,
    regularized_association,
    uniform_targets,
)
from catshrink.service.app import create_app

COUNTS = [[10, 20], [30, 40]]


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_ok(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok" and "version" in body


class TestEstimateEndpoint:
    def test_beta_posterior_mean(self, client):
        body = client.post(
            "/estimate", json={"x": 0, "n": 10, "prior_a": 1, "prior_b": 1}
        ).json()
        assert body["estimator"] == "beta"
        assert body["estimate"] == posterior_mean_beta(BetaPrior(1, 1), BinomialSample(0, 10))

    def test_map_flags(self, client):
        body = client.post(
            "/estimate",
            json={"x": 0, "n": 2, "estimator": "map", "prior_a": 0.5, "prior_b": 0.5},
        ).json()
        assert body["estimate"] == 0.0
        assert body["boundary_mode"] is True and body["prior_advisory"] is True

    def test_missing_prior_rejected(self, client):
        response = client.post("/estimate", json={"x": 1, "n": 10, "estimator": "beta"})
        assert response.status_code == 422

    def test_pydantic_validation(self, client):
        assert client.post("/estimate", json={"x": -1, "n": 10}).status_code == 422
        assert client.post(
            "/estimate", json={"x": 1, "n": 10, "estimator": "beta", "prior_a": 0, "prior_b": 1}
        ).status_code == 422


class TestTestEndpoint:
    def test_homogeneity_matches_library(self, client):
        body = client.post(
            "/test", json={"kind": "homogeneity", "lambda": 0.5, "counts": COUNTS}
        ).json()
        report = homogeneity_regularized(new_table(COUNTS), 0.5)
        assert body["lambda"] == 0.5
        assert body["statistic"] == report.statistic
        assert body["scaled_statistic"] == report.scaled_statistic
        assert body["p_two_sided"] == report.p_two_sided
        assert body["reference"] == "std_normal"

    def test_sign_requires_x_n(self, client):
        assert client.post("/test", json={"kind": "sign"}).status_code == 422

    def test_counts_required_for_table_tests(self, client):
        assert client.post("/test", json={"kind": "mcnemar"}).status_code == 422

    def test_domain_error_maps_to_400(self, client):
        response = client.post(
            "/test", json={"kind": "homogeneity", "counts": [[0, 0], [5, 5]]}
        )
        assert response.status_code == 400
        assert response.json()["error"] == "DegenerateMarginError"

    def test_lambda_zero_rejected_by_schema(self, client):
        response = client.post(
            "/test", json={"kind": "homogeneity", "lambda": 0, "counts": COUNTS}
        )
        assert response.status_code == 422

    def test_negative_count_maps_to_400(self, client):
        response = client.post(
            "/test", json={"kind": "homogeneity", "counts": [[1, -2], [3, 4]]}
        )
        assert response.status_code == 400
        assert response.json()["error"] == "NegativeCellError"


class TestAssocEndpoint:
    def test_matches_library(self, client):
        body = client.post("/assoc", json={"counts": COUNTS, "lambda": 0.5}).json()
        report = regularized_association(new_table(COUNTS), 0.5)
        assert body["z_star"] == report.z_star
        assert body["pearson_c"] == report.pearson_c
        assert body["phi"] == report.phi
        assert body["cramers_v"] == report.cramers_v
        assert body["n"] == 100


class TestMiEndpoint:
    def test_matches_library(self, client):
        body = client.post("/mi", json={"counts": [[1, 0], [0, 1]], "lambda": 0.5}).json()
        result = mi_regularized(new_table([[1, 0], [0, 1]]), 0.5, uniform_targets(2, 2))
        assert body["value_nats"] == result.value
        assert body["value_bits"] == result.value / math.log(2.0)
        assert body["cells_elided"] == 0

    def test_custom_targets(self, client):
        body = client.post(
            "/mi",
            json={
                "counts": [[3, 0], [1, 2]],
                "lambda": 0.5,
                "targets": [[0.4, 0.0], [0.2, 0.4]],
            },
        ).json()
        assert body["cells_elided"] == 1

    def test_bad_targets_map_to_400(self, client):
        response = client.post(
            "/mi", json={"counts": [[1, 1], [1, 1]], "targets": [[0.9, 0.9], [0.9, 0.9]]}
        )
        assert response.status_code == 400


class TestBootstrapEndpoint:
    def test_matches_library(self, client):
        body = client.post(
            "/bootstrap",
            json={"counts": COUNTS, "kind": "homogeneity", "seed": 42, "replicates": 200},
        ).json()
        report = bootstrap_homogeneity(
            new_table(COUNTS), 1.0, BootstrapConfig(seed=42, replicates=200)
        )
        assert body["rejection_rate"] == report.rejection_rate
        assert body["seed"] == 42 and body["replicates"] == 200
        for level, value in report.empirical_quantiles.items():
            assert body["empirical_quantiles"][str(level)] == value

    def test_insufficient_replicates_maps_to_400(self, client):
        response = client.post(
            "/bootstrap",
            json={"counts": COUNTS, "kind": "homogeneity", "seed": 1, "replicates": 10},
        )
        assert response.status_code == 400
        assert response.json()["error"] == "InsufficientReplicatesError"
