"""Command-line interface.

Thin client over the library: every subcommand parses its inputs, calls the
corresponding library function, and prints the exact numbers it returned.
Structured output is a single JSON document with floats rendered at 17
significant digits so re-parsing reproduces the values bit for bit.

Exit codes: 0 success, 2 malformed input or invalid option values,
3 domain errors raised by the analysis modules.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .association import regularized_association
from .bootstrap import BootstrapConfig, bootstrap_homogeneity, bootstrap_mcnemar
from .errors import CatshrinkError, ParseError
from .estimators import (
    BetaPrior,
    BinomialSample,
    bayes_laplace,
    jeffreys,
    map_estimate,
    mle,
    posterior_mean_beta,
)
from .hypotests import (
    homogeneity_regularized,
    mcnemar_regularized,
    sign_regularized,
)
from .mutual_info import mi_regularized, targets_from_matrix, uniform_targets
from .table import ContingencyTable, parse_real_matrix, parse_table

_LN2 = math.log(2.0)


class _UsageError(Exception):
    """Invalid option value; message names the offending field."""


def _require(condition: bool, field: str, message: str) -> None:
    if not condition:
        raise _UsageError(f"{field}: {message}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"table: cannot read {path!r}: {exc.strerror or exc}") from exc


def _load_table(args: argparse.Namespace) -> ContingencyTable:
    return parse_table(_read_text(args.table))


def _sample(args: argparse.Namespace) -> BinomialSample:
    _require(args.x is not None, "--x", "required for this command")
    _require(args.n is not None, "--n", "required for this command")
    _require(args.x >= 0, "--x", "must be nonnegative")
    _require(args.n >= 1, "--n", "must be at least 1")
    _require(args.x <= args.n, "--x", "must not exceed --n")
    return BinomialSample(successes=args.x, trials=args.n)


def _check_unit_interval(value: float, field: str, open_left: bool = False) -> None:
    if open_left:
        _require(0.0 < value <= 1.0, field, "must lie in (0, 1]")
    else:
        _require(0.0 <= value <= 1.0, field, "must lie in [0, 1]")


def _prior(args: argparse.Namespace) -> BetaPrior:
    _require(args.prior_a is not None, "--prior-a", "required for this estimator")
    _require(args.prior_b is not None, "--prior-b", "required for this estimator")
    _require(args.prior_a > 0, "--prior-a", "must be positive")
    _require(args.prior_b > 0, "--prior-b", "must be positive")
    return BetaPrior(a=args.prior_a, b=args.prior_b)


# ---------------------------------------------------------------------------
# Structured (JSON) serialization with lossless float formatting.

def _json_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    if value is None:
        return "null"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = ",".join(f"{json.dumps(str(k))}:{_json_value(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_json_value(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _human_value(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def _render(doc: dict, fmt: str) -> str:
    if fmt == "structured":
        return _json_value(doc)
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {_human_value(v)}" for k, v in value.items())
        elif isinstance(value, (list, tuple)):
            rendered = ", ".join(_human_value(v) for v in value)
            lines.append(f"{key}: {rendered if value else '-'}")
        else:
            lines.append(f"{key}: {_human_value(value)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Subcommand handlers. Each returns the report document to print.

def _cmd_estimate(args: argparse.Namespace) -> dict:
    sample = _sample(args)
    estimator = args.estimator
    if estimator is None:
        estimator = "beta" if args.prior_a is not None or args.prior_b is not None else "mle"
    doc: dict[str, Any] = {"command": "estimate", "estimator": estimator, "x": args.x, "n": args.n}
    if estimator == "mle":
        doc["estimate"] = mle(sample)
    elif estimator == "bl":
        doc["estimate"] = bayes_laplace(sample)
    elif estimator == "jeffreys":
        doc["estimate"] = jeffreys(sample)
    elif estimator == "beta":
        prior = _prior(args)
        doc.update(prior_a=prior.a, prior_b=prior.b, prior_advisory=prior.advisory)
        doc["estimate"] = posterior_mean_beta(prior, sample)
    elif estimator == "map":
        prior = _prior(args)
        doc.update(prior_a=prior.a, prior_b=prior.b, prior_advisory=prior.advisory)
        result = map_estimate(prior, sample)
        doc["estimate"] = result.value
        doc["boundary_mode"] = result.boundary_mode
        doc["undefined_mode"] = result.undefined_mode
    return doc


def _cmd_test(args: argparse.Namespace) -> dict:
    _check_unit_interval(args.lam, "--lambda", open_left=True)
    if args.kind == "sign":
        _check_unit_interval(args.pi0, "--pi0")
        report = sign_regularized(_sample(args), args.lam, args.pi0)
        extra: dict[str, Any] = {"x": args.x, "n": args.n, "pi0": args.pi0}
    elif args.kind == "homogeneity":
        report = homogeneity_regularized(_load_table(args), args.lam)
        extra = {}
    else:
        _check_unit_interval(args.tau, "--tau")
        report = mcnemar_regularized(_load_table(args), args.lam, args.tau)
        extra = {"tau": args.tau}
    doc: dict[str, Any] = {"command": "test", "kind": args.kind, "lambda": args.lam}
    doc.update(extra)
    doc.update(
        statistic=report.statistic,
        scaled_statistic=report.scaled_statistic,
        reference=report.reference.value,
        p_two_sided=report.p_two_sided,
        p_one_sided_upper=report.p_one_sided_upper,
        warnings=list(report.warnings),
    )
    return doc


def _cmd_assoc(args: argparse.Namespace) -> dict:
    _check_unit_interval(args.lam, "--lambda", open_left=True)
    table = _load_table(args)
    report = regularized_association(table, args.lam)
    return {
        "command": "assoc",
        "lambda": args.lam,
        "n": table.n,
        "z_star": report.z_star,
        "pearson_c": report.pearson_c,
        "phi": report.phi,
        "cramers_v": report.cramers_v,
    }


def _cmd_mi(args: argparse.Namespace) -> dict:
    _check_unit_interval(args.lam, "--lambda")
    table = _load_table(args)
    if args.targets is not None:
        matrix = parse_real_matrix(_read_text(args.targets))
        try:
            targets = targets_from_matrix(matrix)
        except ValueError as exc:
            raise ParseError(f"invalid targets: {exc}") from exc
    else:
        targets = uniform_targets(table.n_rows, table.n_cols)
    result = mi_regularized(table, args.lam, targets)
    bits = result.value / _LN2
    return {
        "command": "mi",
        "lambda": args.lam,
        "base": args.base,
        "value": bits if args.base == "bits" else result.value,
        "value_nats": result.value,
        "value_bits": bits,
        "cells_elided": result.cells_elided,
    }


def _cmd_bootstrap(args: argparse.Namespace) -> dict:
    _check_unit_interval(args.lam, "--lambda", open_left=True)
    table = _load_table(args)
    config = BootstrapConfig(seed=args.seed, replicates=args.replicates, alpha=args.alpha)
    if args.kind == "homogeneity":
        report = bootstrap_homogeneity(table, args.lam, config)
        extra: dict[str, Any] = {}
    else:
        _check_unit_interval(args.tau, "--tau")
        report = bootstrap_mcnemar(table, args.lam, args.tau, config)
        extra = {"tau": args.tau}
    doc: dict[str, Any] = {
        "command": "bootstrap",
        "kind": args.kind,
        "lambda": args.lam,
    }
    doc.update(extra)
    doc.update(
        replicates=report.replicates,
        seed=report.seed,
        alpha=args.alpha,
        rejection_rate=report.rejection_rate,
        empirical_quantiles={str(k): v for k, v in report.empirical_quantiles.items()},
    )
    return doc


def _cmd_serve(args: argparse.Namespace) -> None:
    import uvicorn

    uvicorn.run("catshrink.service.app:app", host=args.host, port=args.port)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catshrink",
        description="Shrinkage estimation and regularized inference for categorical data.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("human", "structured"),
            default="human",
            help="output style: readable lines or a JSON document",
        )

    def add_table(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "table",
            nargs="?",
            default="-",
            help="path to the table (delimited text or JSON with 'counts'); '-' reads stdin",
        )

    p = sub.add_parser("estimate", help="binomial proportion estimators")
    p.add_argument("--x", type=int, required=True, help="number of successes")
    p.add_argument("--n", type=int, required=True, help="number of trials")
    p.add_argument("--estimator", choices=("mle", "beta", "bl", "jeffreys", "map"))
    p.add_argument("--prior-a", type=float, help="beta prior a (beta/map estimators)")
    p.add_argument("--prior-b", type=float, help="beta prior b (beta/map estimators)")
    add_format(p)
    p.set_defaults(handler=_cmd_estimate)

    p = sub.add_parser("test", help="regularized hypothesis tests")
    p.add_argument("--kind", choices=("sign", "homogeneity", "mcnemar"), required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--pi0", type=float, default=0.5, help="sign-test shrinkage target")
    p.add_argument("--tau", type=float, default=0.5, help="McNemar shrinkage target")
    p.add_argument("--x", type=int, help="successes (sign test)")
    p.add_argument("--n", type=int, help="trials (sign test)")
    add_table(p)
    add_format(p)
    p.set_defaults(handler=_cmd_test)

    p = sub.add_parser("assoc", help="regularized association measures (2x2)")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    add_table(p)
    add_format(p)
    p.set_defaults(handler=_cmd_assoc)

    p = sub.add_parser("mi", help="regularized mutual information")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--targets", help="path to a target matrix matching the table shape")
    p.add_argument("--base", choices=("nats", "bits"), default="nats")
    add_table(p)
    add_format(p)
    p.set_defaults(handler=_cmd_mi)

    p = sub.add_parser("bootstrap", help="parametric bootstrap calibration")
    p.add_argument("--kind", choices=("homogeneity", "mcnemar"), required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--tau", type=float, default=0.5, help="McNemar shrinkage target")
    p.add_argument("--replicates", type=int, default=10_000)
    p.add_argument("--seed", type=int, required=True, help="RNG seed (required for reproducibility)")
    p.add_argument("--alpha", type=float, default=0.05)
    add_table(p)
    add_format(p)
    p.set_defaults(handler=_cmd_bootstrap)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CatshrinkError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    if doc is not None:
        print(_render(doc, args.format))
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
