"""Plain-data payloads, JSON and text rendering for command output."""
from __future__ import annotations

import json
import math

from .complex import Diagnostics, build_complex
from .criteria import CriterionReport, ScanResult
from .polygons import PolygonParams, feit_higman_lambda

SIG_DIGITS = 9


def fmt(x) -> str:
    return "none" if x is None else f"{x:.{SIG_DIGITS}g}"


def _round(obj):
    if isinstance(obj, float):
        return obj if not math.isfinite(obj) else float(f"{obj:.{SIG_DIGITS}g}")
    if isinstance(obj, dict):
        return {str(k): _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def dumps(payload: dict) -> str:
    """Canonical JSON: floats at 9 significant digits, sorted keys."""
    return json.dumps(_round(payload), indent=2, sort_keys=True) + "\n"


def diagnostics_payload(name: str, d: Diagnostics) -> dict:
    return {
        "command": "validate",
        "name": name,
        "pure": d.pure,
        "connected": d.connected,
        "disconnected_links": [list(s) for s in d.disconnected_links],
        "weight_identity_violations": [[k, l, list(s)]
                                       for k, l, s in d.weight_identity_violations],
        "ok": d.ok,
    }


def criterion_payload(name: str, report: CriterionReport, params: dict) -> dict:
    return {
        "command": "check",
        "name": name,
        "criterion": report.criterion,
        "params": params,
        "applicable": report.applicable,
        "passed": report.passed,
        "epsilon": report.epsilon,
        "notes": list(report.notes),
        "per_simplex": [
            {"anchor": list(a.anchor), "margins": dict(a.margins), "passed": a.passed}
            for a in report.per_simplex
        ],
    }


def scan_payload(scan: ScanResult) -> dict:
    return {
        "command": "scan",
        "labels": list(scan.labels),
        "rows": [{"q": r.q, "lambdas": list(r.lambdas), "zuk": r.zuk, "thm1": r.thm1}
                 for r in scan.rows],
        "min_q_zuk": scan.min_q_zuk,
        "min_q_thm1": scan.min_q_thm1,
        "disclaimer": scan.disclaimer,
    }


def render_text(payload: dict) -> str:
    """Human-readable rendering of any command payload."""
    cmd = payload["command"]
    out = []
    if cmd == "validate":
        out.append(f"complex: {payload['name']}")
        out.append(f"pure: {payload['pure']}")
        out.append(f"connected: {payload['connected']}")
        for s in payload["disconnected_links"]:
            out.append(f"disconnected link at {tuple(s)}")
        for k, l, s in payload["weight_identity_violations"]:
            out.append(f"weight identity fails at {tuple(s)} for (k, l) = ({k}, {l})")
        out.append("OK" if payload["ok"] else "INVALID")
    elif cmd == "check":
        out.append(f"complex: {payload['name']}  criterion: {payload['criterion']}")
        for a in payload["per_simplex"]:
            margins = "  ".join(f"{k}={fmt(v)}" for k, v in sorted(a["margins"].items()))
            out.append(f"  {tuple(a['anchor'])}  {margins}  "
                       f"{'pass' if a['passed'] else 'FAIL'}")
        for note in payload["notes"]:
            out.append(f"note: {note}")
        if not payload["applicable"]:
            out.append("verdict: NOT APPLICABLE")
        else:
            out.append(f"verdict: {'PASS' if payload['passed'] else 'FAIL'}"
                       + (f"  epsilon={fmt(payload['epsilon'])}"
                          if payload["passed"] else ""))
    elif cmd == "polygon":
        out.append(f"generalized {payload['m']}-gon, (s, t) = ({payload['s']}, {payload['t']})")
        out.append(f"lambda = {fmt(payload['lambda'])}")
        out.append(f"lambda_bar = {fmt(payload['lambda_bar'])}")
    elif cmd == "scan":
        out.append(f"labels (m12, m13, m23) = {tuple(payload['labels'])}")
        out.append("   q  lambda_1     lambda_2     lambda_3     zuk   thm1")
        for r in payload["rows"]:
            lam = "  ".join(f"{fmt(x):<11}" for x in r["lambdas"])
            out.append(f"{r['q']:>4}  {lam}  {'PASS' if r['zuk'] else 'FAIL':<5} "
                       f"{'PASS' if r['thm1'] else 'FAIL'}")
        out.append(f"minimal q (thm1): {payload['min_q_thm1']}")
        out.append(f"minimal q (zuk):  {payload['min_q_zuk']}")
        out.append(f"note: {payload['disclaimer']}")
    elif cmd == "lyons":
        for i, (lam, bar) in enumerate(zip(payload["lambdas"], payload["lambda_bars"]), 1):
            out.append(f"link {i}: lambda = {fmt(lam)}  lambda_bar = {fmt(bar)}")
        out.append(f"zuk: lambda_bar_2 + lambda_bar_3 = {fmt(payload['zuk_sum'])}  "
                   f"{'PASS' if payload['zuk_passed'] else 'FAIL'}")
        out.append(f"thm1: sum margin = {fmt(payload['thm1_sum'])}  "
                   f"product-sum margin = {fmt(payload['thm1_product_sum'])}  "
                   f"{'PASS' if payload['thm1_passed'] else 'FAIL'}")
        out.append(f"general (k=1, l=2): smallest root = {fmt(payload['general_min_root'])}")
        out.append(f"verdict: {payload['verdict']}")
    return "\n".join(out) + "\n"


# built-in examples

OCTAHEDRON = [[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)]

# link types of the Lyons GAB: complete bipartite, 3-gon with s=5, 6-gon with s=t=5
LYONS_LINKS = (PolygonParams(2, 5, 5), PolygonParams(3, 5, 5), PolygonParams(6, 5, 5))
LYONS_LAMBDAS = tuple(feit_higman_lambda(p) for p in LYONS_LINKS)


def builtin(name: str):
    """``(complex, link-gap overrides)`` for a built-in example name."""
    if name == "octahedron":
        return build_complex(OCTAHEDRON), None
    if name == "triangle":
        return build_complex([[0, 1, 2]]), None
    if name == "lyons":
        # one triangle whose vertices carry the three link types
        return build_complex([[0, 1, 2]]), dict(enumerate(LYONS_LAMBDAS))
    raise KeyError(name)


BUILTINS = ("octahedron", "triangle", "lyons")
