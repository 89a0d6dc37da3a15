"""
Command-line entry point.

Exit codes: 0 pass, 1 fail, 2 usage or parse error, 3 I/O error,
4 criterion not applicable.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import cosine, criteria
from .complex import build_complex, validate
from .errors import (
    BadGonality,
    BadLabel,
    BadParams,
    ComplexError,
    DisconnectedLink,
    LinkgapError,
    LinkTooSmall,
    WrongDimension,
)
from .polygons import PolygonParams, feit_higman_lambda
from .report import (
    BUILTINS,
    LYONS_LAMBDAS,
    builtin,
    criterion_payload,
    diagnostics_payload,
    dumps,
    render_text,
    scan_payload,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_NA = 0, 1, 2, 3, 4


class ParseError(Exception):
    pass


def load_complex(path: str):
    """Read ``{"name": ..., "maximal_simplices": [[...], ...]}``; built-in
    names are accepted in place of a path."""
    if path in BUILTINS:
        cx, lambdas = builtin(path)
        return path, cx, lambdas
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "maximal_simplices" not in doc:
        raise ParseError(f"{path}: expected an object with 'maximal_simplices'")
    tops = doc["maximal_simplices"]
    if not isinstance(tops, list) or not all(
            isinstance(t, list) and all(isinstance(v, int) and not isinstance(v, bool)
                                        for v in t) for t in tops):
        raise ParseError(f"{path}: 'maximal_simplices' must be a list of integer lists")
    try:
        cx = build_complex(tops)
    except (ComplexError, ValueError) as exc:
        raise ParseError(f"{path}: {type(exc).__name__}: {exc}") from None
    return str(doc.get("name", path)), cx, None


def load_cos_table(path: str) -> dict[int, float]:
    """JSON object mapping vertex id (as a string key) to a cosine value."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from None
    try:
        return {int(k): float(v) for k, v in doc.items()}
    except (AttributeError, TypeError, ValueError):
        raise ParseError(f"{path}: expected an object of vertex id -> number") from None


def emit(payload: dict, fmt: str):
    sys.stdout.write(dumps(payload) if fmt == "json" else render_text(payload))


def cmd_validate(args) -> int:
    name, cx, _ = load_complex(args.file)
    d = validate(cx)
    emit(diagnostics_payload(name, d), args.format)
    return EXIT_PASS if d.pure and d.connected and not d.disconnected_links else EXIT_FAIL


def _run_criterion(args, cx, lambdas):
    c = args.criterion
    if c == "bs":
        return criteria.check_bs(cx, args.k, args.eps, lambdas), {"k": args.k, "eps": args.eps}
    if c == "zuk":
        return criteria.check_zuk_2d(cx, lambdas), {}
    if c == "thm1":
        return criteria.check_theorem1_2d(cx, lambdas), {}
    if c == "general":
        l = args.l if args.l is not None else args.k + 1
        rep = criteria.check_general(cx, args.k, l, args.eps, lambdas,
                                     extension=args.extension)
        return rep, {"k": args.k, "l": l, "eps": args.eps, "extension": args.extension}
    # thm2
    if args.cos_table:
        table = load_cos_table(args.cos_table)
        return cosine.check_theorem2_2d(cx, cos_table=table), {"cos_table": args.cos_table}
    if lambdas:
        raise ParseError("this built-in carries link gaps only; supply --cos-table")
    estimator = args.estimator
    if estimator == "auto":
        small = all(_link_size(cx, v) <= cosine.ORACLE_MAX_VERTICES
                    for v in cx.faces_by_dim[0])
        estimator = "oracle" if small and args.cos_dim == 1 else "estimate"
    rep = cosine.check_theorem2_2d(cx, estimator=estimator, dim=args.cos_dim,
                                   restarts=args.restarts, seed=args.seed)
    params = {"estimator": estimator}
    if estimator == "estimate":
        params.update(cos_dim=args.cos_dim, restarts=args.restarts, seed=args.seed)
    return rep, params


def _link_size(cx, v):
    return sum(1 for u in cx.faces_by_dim[0] if u != v and tuple(sorted(u + v)) in cx.weight)


def cmd_check(args) -> int:
    name, cx, lambdas = load_complex(args.file)
    try:
        report, params = _run_criterion(args, cx, lambdas)
    except (DisconnectedLink, LinkTooSmall) as exc:
        sys.stderr.write(f"not applicable: {exc}\n")
        return EXIT_NA
    emit(criterion_payload(name, report, params), args.format)
    if not report.applicable:
        return EXIT_NA
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_polygon(args) -> int:
    p = PolygonParams(args.m, args.s, args.t)
    lam = feit_higman_lambda(p)
    emit({"command": "polygon", "m": p.m, "s": p.s, "t": p.t,
          "lambda": lam, "lambda_bar": lam - 0.5}, args.format)
    return EXIT_PASS


def cmd_scan(args) -> int:
    try:
        labels = [int(x) for x in args.labels.split(",")]
    except ValueError:
        raise BadLabel(f"cannot parse labels {args.labels!r}") from None
    scan = criteria.diagram_scan(labels, args.qmax)
    emit(scan_payload(scan), args.format)
    return EXIT_PASS


def cmd_lyons(args) -> int:
    cx, lambdas = builtin("lyons")
    zuk = criteria.check_zuk_2d(cx, lambdas)
    thm1 = criteria.check_theorem1_2d(cx, lambdas)
    general = criteria.check_general(cx, 1, 2, criteria.STRICT, lambdas)
    (row,) = thm1.per_simplex
    bars = [lam - 0.5 for lam in LYONS_LAMBDAS]
    payload = {
        "command": "lyons",
        "lambdas": list(LYONS_LAMBDAS),
        "lambda_bars": bars,
        "zuk_sum": min(a.margins["sum"] for a in zuk.per_simplex),
        "zuk_passed": zuk.passed,
        "thm1_sum": row.margins["sum"],
        "thm1_product_sum": row.margins["product_sum"],
        "thm1_passed": thm1.passed,
        "general_min_root": general.per_simplex[0].margins["min_root"],
        "verdict": "PASS" if thm1.passed else "FAIL",
    }
    emit(payload, args.format)
    return EXIT_PASS if thm1.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="linkgap",
        description="Local spectral and cosine criteria on finite simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[fmt], help="check purity and link connectivity")
    p.add_argument("file", help=f"complex file or built-in name {BUILTINS}")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", parents=[fmt], help="evaluate one criterion")
    p.add_argument("file", help=f"complex file or built-in name {BUILTINS}")
    p.add_argument("--criterion", required=True,
                   choices=("bs", "zuk", "thm1", "general", "thm2"))
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--l", type=int, default=None, help="defaults to k + 1")
    p.add_argument("--eps", type=float, default=criteria.STRICT)
    p.add_argument("--extension", action="store_true",
                   help="use constrained eigenvalues when the determinant is degenerate")
    p.add_argument("--estimator", choices=("auto", "oracle", "estimate"), default="auto")
    p.add_argument("--cos-dim", type=int, default=1)
    p.add_argument("--restarts", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cos-table", default=None, help="JSON object: vertex id -> cosine")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("polygon", parents=[fmt], help="Feit-Higman spectral gap")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="defaults to s")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("scan", parents=[fmt], help="minimal q per criterion for a rank-3 diagram")
    p.add_argument("--labels", required=True, help="M12,M13,M23")
    p.add_argument("--qmax", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("lyons", parents=[fmt], help="the Lyons GAB worked example")
    p.set_defaults(func=cmd_lyons)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except OSError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return EXIT_IO
    except (ParseError, BadGonality, BadParams, BadLabel, WrongDimension) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except LinkgapError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
