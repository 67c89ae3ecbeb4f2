"""Command-line front end for the verification suites.

The CLI is a thin client over the same in-process runner the HTTP service
uses: flags (optionally seeded from a JSON config file) build a
`SuiteRequest`, the runner produces `CheckReport`s, and the report stream is
written as newline-delimited JSON or as the CSV mirror.

Exit codes: 0 all checks passed; 1 at least one check failed numerically or
raised a structured error; 2 usage error (unknown suite, bad flag or config).
"""
from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .reports import write_csv, write_ndjson
from .suites import (
    SUITE_NAMES,
    SuiteRequest,
    UnknownSuiteError,
    limit_study,
    run_request,
)

USAGE_ERROR = 2

_REQUEST_KEYS = tuple(SuiteRequest.model_fields)
_EXTRA_KEYS = ("out", "format", "limit_study")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockbench",
        description="Run named verification suites and emit machine-readable reports.",
    )
    parser.add_argument(
        "--suite",
        help=f"one of: {', '.join(SUITE_NAMES)}, all (default: all)",
    )
    parser.add_argument(
        "--config",
        help="JSON file with the same keys as the flags; explicit flags take precedence",
    )
    parser.add_argument("--two-k", type=float, dest="two_k", help="su(1,1) weight 2K")
    parser.add_argument("--z-re", type=float, dest="z_re", help="Re z of the operator amplitude")
    parser.add_argument("--z-im", type=float, dest="z_im", help="Im z of the operator amplitude")
    parser.add_argument("--chi", type=float, help="|chi| for the conjecture integrand")
    parser.add_argument("--cutoff", type=int, help="Fock-space truncation (per-mode for paris)")
    parser.add_argument("--safe-sector", type=int, dest="safe_sector", help="comparison block rank")
    parser.add_argument("--tol", type=float, help="override the suite's default tolerance")
    parser.add_argument("--radius", type=float, help="plane-quadrature radius")
    parser.add_argument("--radial-nodes", type=int, dest="radial_nodes")
    parser.add_argument("--angular-nodes", type=int, dest="angular_nodes")
    parser.add_argument("--s-max", type=float, dest="s_max", help="disk-quadrature radial cutoff")
    parser.add_argument("--out", help="write the report stream to this file instead of stdout")
    parser.add_argument("--format", choices=("json", "csv"), help="json = NDJSON (default), csv = mirror")
    parser.add_argument("--jobs", type=int, help="run up to N checks concurrently (default 1)")
    parser.add_argument(
        "--limit-study",
        type=int,
        dest="limit_study",
        metavar="DEPTH",
        help="conjecture-only mode: sweep the weight 2K = 1 + 2^-i for i = 1..DEPTH "
        "toward the degenerate 2K = 1, scaling the radial cutoff like 1/(2K-1)",
    )
    return parser


def _load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValueError("config must be a JSON object of flag keys")
    allowed = set(_REQUEST_KEYS) | set(_EXTRA_KEYS)
    settings = {}
    for key, value in raw.items():
        normalized = key.replace("-", "_")
        if normalized not in allowed:
            raise ValueError(f"unknown config key {key!r}")
        settings[normalized] = value
    return settings


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = {
        key: value
        for key, value in vars(args).items()
        if key != "config" and value is not None
    }
    if args.config:
        try:
            config = _load_config(args.config)
        except (OSError, ValueError) as exc:
            print(f"fockbench: bad config: {exc}", file=sys.stderr)
            return USAGE_ERROR
        for key, value in config.items():
            settings.setdefault(key, value)

    out_path = settings.pop("out", None)
    out_format = settings.pop("format", None) or "json"
    if out_format not in ("json", "csv"):
        print(f"fockbench: unknown format {out_format!r}", file=sys.stderr)
        return USAGE_ERROR
    study_depth = settings.pop("limit_study", None)
    explicit_suite = settings.get("suite")
    settings.setdefault("suite", "all")

    try:
        request = SuiteRequest(**settings)
    except ValidationError as exc:
        print(f"fockbench: invalid parameters: {exc}", file=sys.stderr)
        return USAGE_ERROR

    if study_depth is not None:
        if explicit_suite is not None and explicit_suite != "conjecture":
            print(
                "fockbench: --limit-study is a conjecture-suite mode; "
                f"it cannot run under --suite {explicit_suite}",
                file=sys.stderr,
            )
            return USAGE_ERROR
        if study_depth < 1:
            print("fockbench: --limit-study depth must be at least 1", file=sys.stderr)
            return USAGE_ERROR
        chi = request.chi if request.chi is not None else 0.5
        angular = request.angular_nodes if request.angular_nodes is not None else 256
        reports = limit_study(study_depth, chi=chi, angular_nodes=angular)
        label = f"conjecture limit study (depth {study_depth})"
    else:
        try:
            result = run_request(request)
        except UnknownSuiteError as exc:
            print(f"fockbench: {exc}", file=sys.stderr)
            return USAGE_ERROR
        reports = result.reports
        label = f"suite {request.suite!r}"

    writer = write_ndjson if out_format == "json" else write_csv
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            writer(reports, fh)
    else:
        writer(reports, sys.stdout)

    passed = sum(r.pass_ for r in reports)
    print(f"fockbench: {label}: {passed}/{len(reports)} checks passed", file=sys.stderr)
    return 0 if passed == len(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
