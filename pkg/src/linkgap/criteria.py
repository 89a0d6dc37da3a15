"""
Local spectral criteria evaluated over every simplex of a finite complex.

All criteria consume link gaps ``lambda(X_tau)`` in the scale of the upper
Laplacian of the link (see :mod:`linkgap.spectral`). Gaps may be supplied
directly through ``lambdas`` (a mapping from simplex to gap); any simplex
not listed there has its link computed from the complex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

import numpy as np

from .complex import Simplex, SimplicialComplex, build_complex, simplex
from .errors import BadLabel, DimOutOfRange, WrongDimension
from .pkl import build_system, constrained_roots, det_roots
from .polygons import GONALITIES, PolygonParams, feit_higman_lambda
from .spectral import link_lambda

STRICT = 1e-9
# the product-sum is quadratic in the gaps, so its cutoff is STRICT squared
STRICT_QUADRATIC = STRICT ** 2
ROOT_AGREEMENT = 1e-8

__all__ = [
    "STRICT",
    "LambdaBar",
    "AnchorResult",
    "CriterionReport",
    "ScanResult",
    "link_lambdas",
    "lambda_bar_all",
    "s_values",
    "check_bs",
    "check_zuk_2d",
    "check_theorem1_2d",
    "check_general",
    "diagram_scan",
]


@dataclass(frozen=True)
class LambdaBar:
    tau: Simplex
    lam: float
    lambda_bar: float


@dataclass(frozen=True)
class AnchorResult:
    anchor: Simplex
    margins: dict[str, float]
    passed: bool


@dataclass
class CriterionReport:
    criterion: str
    per_simplex: list[AnchorResult]
    applicable: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.applicable and all(a.passed for a in self.per_simplex)

    @property
    def epsilon(self) -> float | None:
        """Smallest margin over all anchors, when the criterion passed."""
        if not self.passed or not self.per_simplex:
            return None
        return min(min(a.margins.values()) for a in self.per_simplex)


def _normalize_lambdas(lambdas) -> dict[Simplex, float]:
    if not lambdas:
        return {}
    out = {}
    for key, val in lambdas.items():
        key = (key,) if isinstance(key, (int, np.integer)) else key
        out[simplex(key)] = float(val)
    return out


def link_lambdas(complex: SimplicialComplex, k: int,
                 lambdas: Mapping | None = None) -> dict[Simplex, float]:
    """Gap of the link of every ``(k-1)``-simplex, preferring supplied values."""
    if not 1 <= k <= complex.n - 1:
        raise DimOutOfRange(f"k={k} outside 1..{complex.n - 1}")
    given = _normalize_lambdas(lambdas)
    out = {}
    for tau in complex.faces_by_dim[k - 1]:
        out[tau] = given[tau] if tau in given else link_lambda(complex, tau).lambda_scaled
    return out


def lambda_bar_all(complex: SimplicialComplex, k: int,
                   lambdas: Mapping | None = None) -> list[LambdaBar]:
    """Shifted gaps ``lambda - k(n-k)/(k+1)`` of all ``(k-1)``-links."""
    shift = k * (complex.n - k) / (k + 1)
    return [LambdaBar(tau, lam, lam - shift)
            for tau, lam in link_lambdas(complex, k, lambdas).items()]


def s_values(complex: SimplicialComplex, k: int,
             bars: list[LambdaBar]) -> dict[Simplex, float]:
    """Sum of shifted gaps over the ``k + 1`` facets of every ``k``-simplex."""
    lb = {b.tau: b.lambda_bar for b in bars}
    return {s: sum(lb[f] for f in combinations(s, k))
            for s in complex.faces_by_dim[k]}


def check_bs(complex: SimplicialComplex, k: int, eps: float,
             lambdas: Mapping | None = None) -> CriterionReport:
    """Every ``(k-1)``-link satisfies ``lambda >= k(n-k)/(k+1) + eps``."""
    rows = [AnchorResult(b.tau, {"lambda_bar": b.lambda_bar},
                         b.lambda_bar >= eps - STRICT)
            for b in lambda_bar_all(complex, k, lambdas)]
    return CriterionReport("bs", rows)


def _require_2d(complex):
    if complex.n != 2:
        raise WrongDimension(f"criterion needs a 2-dimensional complex, got n={complex.n}")


def check_zuk_2d(complex: SimplicialComplex,
                 lambdas: Mapping | None = None) -> CriterionReport:
    """``lambda(X_u) + lambda(X_v) > 1`` on every edge."""
    _require_2d(complex)
    lam = link_lambdas(complex, 1, lambdas)
    rows = []
    for u, v in complex.faces_by_dim[1]:
        margin = lam[(u,)] + lam[(v,)] - 1.0
        rows.append(AnchorResult((u, v), {"sum": margin}, margin > STRICT))
    return CriterionReport("zuk", rows)


def check_theorem1_2d(complex: SimplicialComplex,
                      lambdas: Mapping | None = None) -> CriterionReport:
    """
    On every triangle ``(u, v, w)``: the vertex-link gaps sum to more than
    3/2 and the pairwise products of the edge values
    ``S_uv = lambda_u + lambda_v - 1`` sum to a positive number.
    """
    _require_2d(complex)
    bars = lambda_bar_all(complex, 1, lambdas)
    S = s_values(complex, 1, bars)
    lam = {b.tau: b.lam for b in bars}
    rows = []
    for tri in complex.faces_by_dim[2]:
        u, v, w = tri
        total = lam[(u,)] + lam[(v,)] + lam[(w,)] - 1.5
        a, b, c = S[(u, v)], S[(u, w)], S[(v, w)]
        prod = a * b + a * c + b * c
        rows.append(AnchorResult(tri, {"sum": total, "product_sum": prod},
                                 total > STRICT and prod > STRICT_QUADRATIC))
    return CriterionReport("thm1", rows)


def check_general(complex: SimplicialComplex, k: int, l: int, eps: float,
                  lambdas: Mapping | None = None,
                  extension: bool = False) -> CriterionReport:
    """
    Root criterion on every ``l``-simplex: all stationary values of
    ``sum S_sigma x_sigma**2`` over the incidence kernel are ``>= eps``.

    For ``l == k + 1`` the determinant roots and the constrained eigenvalues
    are both computed and must agree. For larger ``l`` the determinant is
    identically zero; the report is marked not applicable unless
    ``extension`` asks for the constrained eigenvalues alone.
    """
    if not 0 < k < l <= complex.n:
        raise WrongDimension(f"need 0 < k < l <= n={complex.n}, got k={k}, l={l}")
    S = s_values(complex, k, lambda_bar_all(complex, k, lambdas))
    report = CriterionReport("general", [])
    for gamma in complex.faces_by_dim[l]:
        local = {f: S[tuple(gamma[i] for i in f)]
                 for f in combinations(range(l + 1), k + 1)}
        system = build_system(k, l, local)
        det = det_roots(system)
        if det.degenerate and not extension:
            report.applicable = False
            report.notes = [
                f"bordered determinant vanishes identically for k={k}, l={l}; "
                "rerun with the constrained-eigenvalue extension"]
            report.per_simplex = []
            return report
        roots = constrained_roots(system).roots
        margins = {"min_root": roots[0]}
        if not det.degenerate:
            gap = max(abs(a - b) for a, b in zip(det.roots, roots)) \
                if len(det.roots) == len(roots) else float("inf")
            if gap > ROOT_AGREEMENT * max(1.0, max(abs(r) for r in roots)):
                report.notes.append(
                    f"{gamma}: determinant roots {det.roots} differ from "
                    f"constrained eigenvalues {roots}")
        rows_pass = roots[0] >= eps
        report.per_simplex.append(AnchorResult(gamma, margins, rows_pass))
    if extension and l > k + 1:
        report.notes.append("constrained-eigenvalue extension (determinant degenerate)")
    return report


TRIANGLE = build_complex([[0, 1, 2]])


@dataclass(frozen=True)
class ScanRow:
    q: int
    lambdas: tuple[float, float, float]
    zuk: bool
    thm1: bool


@dataclass(frozen=True)
class ScanResult:
    labels: tuple[int, int, int]
    rows: tuple[ScanRow, ...]
    min_q_zuk: int | None
    min_q_thm1: int | None
    disclaimer: str = (
        "local triangle condition only; existence of a building with "
        "parameters (q, q) is not checked")


def diagram_scan(labels, q_max: int) -> ScanResult:
    """
    Minimal thickness parameter ``q`` passing each 2-dimensional criterion.

    ``labels = (m12, m13, m23)`` are the Coxeter labels of a rank-3 diagram.
    The link at a vertex of type ``i`` is a generalized ``m_jk``-gon with
    parameters ``(q, q)``.
    """
    labels = tuple(int(m) for m in labels)
    if len(labels) != 3 or any(m not in GONALITIES for m in labels):
        raise BadLabel(f"labels must be three values from {GONALITIES}, got {labels}")
    m12, m13, m23 = labels
    rows = []
    for q in range(2, q_max + 1):
        lam = tuple(feit_higman_lambda(PolygonParams(m, q, q))
                    for m in (m23, m13, m12))
        given = dict(enumerate(lam))
        rows.append(ScanRow(
            q=q, lambdas=lam,
            zuk=check_zuk_2d(TRIANGLE, given).passed,
            thm1=check_theorem1_2d(TRIANGLE, given).passed,
        ))

    def first(key):
        return next((r.q for r in rows if getattr(r, key)), None)

    return ScanResult(labels=labels, rows=tuple(rows),
                      min_q_zuk=first("zuk"), min_q_thm1=first("thm1"))
