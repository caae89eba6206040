"""Command-line front end: catalog lookups, decomposition runs, and the
named verification suites, with machine-readable reports.

Reports go to stdout as canonical JSON (sorted keys, no trailing spaces) or
as flattened tab-separated rows; progress logs go to stderr.  Exit codes:
0 success / suite passed, 1 suite failed, 2 usage error, 3 certification
failure of a randomized computation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from glsw.quivers import catalog_affine
from glsw import decomposition as D, stability as S, suites

SCHEMA_VERSION = 1

log = logging.getLogger("glsw")


def _parse_caps(text):
    caps = {}
    for item in text.split(","):
        key, _, value = item.partition("=")
        if key not in ("dim", "enum") or not value.isdigit():
            raise argparse.ArgumentTypeError(
                f"caps must look like dim=8,enum=1000000 (got {text!r})"
            )
        caps[key] = int(value)
    return caps


def _parse_primes(text):
    try:
        primes = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"primes must be a comma list (got {text!r})")
    if not primes or any(p < 2 for p in primes):
        raise argparse.ArgumentTypeError("primes must be integers >= 2")
    return primes


def _parse_vector(text):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"vector must be a comma list (got {text!r})")


def _add_common(parser):
    parser.add_argument("--seed", type=int, default=None, help="base random seed")
    parser.add_argument("--primes", type=_parse_primes, default=(3, 5, 7))
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument(
        "--caps", type=_parse_caps, default={"dim": 8, "enum": 1_000_000}
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="glsw", description="affine valued-quiver module workbench"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="print a catalog quiver and its root data")
    cat.add_argument("family")
    cat.add_argument("rank", nargs="?", type=int, default=None)
    _add_common(cat)

    dec = sub.add_parser("decompose", help="split a rank vector as m*eta + w")
    dec.add_argument("family")
    dec.add_argument("rank", nargs="?", type=int, default=None)
    dec.add_argument("-v", "--vector", type=_parse_vector, required=True)
    _add_common(dec)

    ver = sub.add_parser("verify", help="run a named verification suite")
    ver.add_argument("suite")
    _add_common(ver)
    return parser


def _resolve_seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("GLSW_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            log.warning("ignoring non-integer GLSW_SEED=%r", env)
    return 0


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for key in sorted(obj):
            yield from _flatten(obj[key], f"{prefix}{key}.")
    elif isinstance(obj, (list, tuple)):
        for k, item in enumerate(obj):
            yield from _flatten(item, f"{prefix}{k}.")
    else:
        yield prefix.rstrip("."), obj


def _emit(report, fmt):
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, separators=(",", ":")))
        sys.stdout.write("\n")
    else:
        for path, value in _flatten(report):
            sys.stdout.write(f"{path}\t{value}\n")


def cmd_catalog(args):
    try:
        q = catalog_affine(args.family, args.rank)
    except ValueError as exc:
        log.error("%s", exc)
        return 2
    theta = S.defect_weight(q)
    report = {
        "schema": SCHEMA_VERSION,
        "command": "catalog",
        "family": args.family,
        "rank": args.rank,
        "quiver": q.to_json_dict(),
        "null_root": q.null_root(),
        "tier": q.catalog_tier,
        "extending_vertex": q.extending_vertex,
        "defect_weight": [str(c) for c in theta.coords],
        "coxeter": q.coxeter_transformation(),
    }
    _emit(report, args.format)
    return 0


def cmd_decompose(args):
    try:
        q = catalog_affine(args.family, args.rank)
    except ValueError as exc:
        log.error("%s", exc)
        return 2
    if len(args.vector) != q.n:
        log.error("vector length %d does not match %d vertices", len(args.vector), q.n)
        return 2
    seed = _resolve_seed(args)
    try:
        rep = D.folded_decomposition(q, args.vector, seed=seed)
    except ValueError as exc:
        log.error("%s", exc)
        return 2
    except D.CertificationError as exc:
        report = {
            "schema": SCHEMA_VERSION,
            "command": "decompose",
            "certified": False,
            "error": str(exc),
            "seed": seed,
        }
        _emit(report, args.format)
        return 3
    report = {
        "schema": SCHEMA_VERSION,
        "command": "decompose",
        "certified": True,
        "family": args.family,
        "rank": args.rank,
    }
    report.update(rep)
    _emit(report, args.format)
    return 0


def cmd_verify(args):
    if args.suite not in suites.SUITES:
        log.error(
            "unknown suite %r (choose from %s)",
            args.suite,
            ", ".join(sorted(suites.SUITES)),
        )
        return 2
    config = {
        "seed": _resolve_seed(args),
        "primes": args.primes,
        "dim_cap": args.caps.get("dim", 8),
        "enum_cap": args.caps.get("enum", 1_000_000),
    }
    report = suites.run_suite(args.suite, config)
    report["schema"] = SCHEMA_VERSION
    report["command"] = "verify"
    _emit(report, args.format)
    return 0 if report["passed"] else 1


def main(argv=None):
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog":
        return cmd_catalog(args)
    if args.command == "decompose":
        return cmd_decompose(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
