"""
Reduced cosines of link graphs and the cosine-matrix criterion.

For a weighted graph with edge weights ``m(u, v)`` and vertex weights
``deg(u) = sum_v m(u, v)`` the reduced cosine is the supremum of::

    sum_E m(u, v) <phi(u), phi(v)>  /  sum_E m(u, v) |phi(u)| |phi(v)|

over nonzero ``phi`` with ``sum_u deg(u) phi(u) = 0`` (equivalently
``sum over edges of phi(u) + phi(v) = 0``). Only the trivial group is
handled; its cosine bounds the cosine for any automorphism group from
above, so a pass obtained from a certified value is a valid pass.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

import numpy as np
from scipy import optimize
from scipy.linalg import null_space

from .complex import Simplex, SimplicialComplex, count_components, link, simplex
from .criteria import STRICT, AnchorResult, CriterionReport, _require_2d
from .errors import (
    DegenerateDenominator,
    DisconnectedLink,
    MissingCos,
    TooLarge,
)
from .spectral import WeightedGraph, skeleton, symmetric_eig

DEN_FLOOR = 1e-12
ORACLE_MAX_VERTICES = 6

HEURISTIC_NOTE = (
    "cosines are multi-start estimates, i.e. lower bounds on the true "
    "values; a PASS may be false, a FAIL is not")

__all__ = [
    "CosineEstimate",
    "AMatrix",
    "cosine_ratio",
    "estimate_cos_r",
    "oracle_cos_r",
    "build_A",
    "check_theorem2_2d",
]


@dataclass(frozen=True)
class CosineEstimate:
    value: float
    witness: np.ndarray
    certified: bool
    restarts_used: int
    dim: int = 1


def _edge_arrays(graph: WeightedGraph):
    index = {v: i for i, v in enumerate(graph.vertices)}
    I = np.array([index[u] for u, _ in graph.edges], dtype=int)
    J = np.array([index[v] for _, v in graph.edges], dtype=int)
    M = np.array([graph.edge_weight[e] for e in graph.edges], dtype=float)
    deg = np.array([graph.vertex_weight[v] for v in graph.vertices])
    return I, J, M, deg


def cosine_ratio(graph: WeightedGraph, phi) -> float:
    """Edge-correlation ratio of ``phi`` (shape ``(n,)`` or ``(n, dim)``)."""
    I, J, M, _ = _edge_arrays(graph)
    phi = np.asarray(phi, dtype=float)
    if phi.ndim == 1:
        phi = phi[:, None]
    norms = np.linalg.norm(phi, axis=1)
    num = np.sum(M * np.sum(phi[I] * phi[J], axis=1))
    den = np.sum(M * norms[I] * norms[J])
    if den < DEN_FLOOR:
        raise DegenerateDenominator("denominator vanishes for this phi")
    value = num / den
    assert abs(value) <= 1 + 1e-12
    return float(value)


def _require_connected(graph):
    if count_components(graph.vertices, graph.edges) != 1:
        raise DisconnectedLink("graph is not connected")


def _batch_ratio(phi, I, J, M):
    """Ratio, numerator and denominator for a batch ``(B, n, d)``."""
    norms = np.linalg.norm(phi, axis=2)
    num = np.einsum("e,bed->b", M, phi[:, I] * phi[:, J])
    den = np.einsum("e,be->b", M, norms[:, I] * norms[:, J])
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(den > DEN_FLOOR, num / den, -np.inf)
    return ratio, num, den, norms


def estimate_cos_r(graph: WeightedGraph, dim: int = 1, restarts: int = 100,
                   seed: int = 0, max_iter: int = 10_000) -> CosineEstimate:
    """
    Multi-start projected ascent on the cosine ratio.

    Every restart draws a Gaussian start from its own generator spawned from
    ``seed``, projects out the weighted-constant component and climbs along
    the projected gradient with a backtracking step. Iterates whose
    denominator falls below ``1e-12`` are rejected. The best ratio found is
    a lower bound on the reduced cosine, returned with its witness.
    """
    _require_connected(graph)
    if dim < 1 or restarts < 1:
        raise ValueError("dim and restarts must be >= 1")
    I, J, M, deg = _edge_arrays(graph)
    n = len(graph)
    W = np.zeros((n, n))
    W[I, J] = M
    W[J, I] = M
    wnorm2 = deg @ deg

    def project_tangent(g):
        return g - deg[None, :, None] * (np.einsum("n,bnd->bd", deg, g) / wnorm2)[:, None, :]

    def normalize(phi):
        return phi / np.linalg.norm(phi, axis=(1, 2), keepdims=True)

    children = np.random.SeedSequence(seed).spawn(restarts)
    phi = np.stack([np.random.default_rng(c).standard_normal((n, dim)) for c in children])
    # weighted-constant component removed in the deg-weighted inner product
    mean = np.einsum("n,bnd->bd", deg, phi) / deg.sum()
    phi = normalize(phi - mean[:, None, :])

    ratio, num, den, norms = _batch_ratio(phi, I, J, M)
    step = np.ones(restarts)
    active = np.isfinite(ratio)
    for _ in range(max_iter):
        if not active.any():
            break
        with np.errstate(divide="ignore", invalid="ignore"):
            unit = np.where(norms[..., None] > 0, phi / norms[..., None], 0.0)
        g_num = W @ phi
        g_den = (W @ norms[..., None]) * unit
        grad = (g_num - ratio[:, None, None] * g_den) / den[:, None, None]
        grad = project_tangent(np.where(np.isfinite(grad), grad, 0.0))
        gnorm2 = np.sum(grad * grad, axis=(1, 2))

        trial = normalize(phi + step[:, None, None] * grad)
        t_ratio, t_num, t_den, t_norms = _batch_ratio(trial, I, J, M)
        accept = active & (t_ratio > ratio + 1e-4 * step * gnorm2)
        gain = np.where(accept, t_ratio - ratio, 0.0)

        phi = np.where(accept[:, None, None], trial, phi)
        ratio = np.where(accept, t_ratio, ratio)
        num = np.where(accept, t_num, num)
        den = np.where(accept, t_den, den)
        norms = np.where(accept[:, None], t_norms, norms)
        step = np.where(accept, np.minimum(step * 2.0, 1e6), step * 0.5)

        stalled = accept & (gain <= 1e-10 * np.maximum(np.abs(ratio), 1e-12))
        active &= ~stalled & (step > 1e-16) & (gnorm2 > 1e-30)

    if not np.isfinite(ratio).any():
        raise DegenerateDenominator("no restart produced a positive denominator")
    best = int(np.argmax(ratio))
    witness = phi[best] if dim > 1 else phi[best][:, 0]
    return CosineEstimate(value=cosine_ratio(graph, witness), witness=witness,
                          certified=False, restarts_used=restarts, dim=dim)


def oracle_cos_r(graph: WeightedGraph, grid: int | None = None,
                 constrained: bool = True, refine: int = 12) -> CosineEstimate:
    """
    Brute-force reduced cosine over scalar functions on a small graph.

    Coefficients in an orthonormal basis of the mean-zero subspace are
    scanned on a ``grid``-point lattice of the cube ``[-1, 1]^(n-1)`` (the
    ratio is scale invariant, so the cube covers every direction); the
    ``refine`` best lattice points are then polished by Nelder-Mead.
    ``constrained=False`` drops the mean-zero condition.
    """
    n = len(graph)
    if n > ORACLE_MAX_VERTICES:
        raise TooLarge(f"oracle handles at most {ORACLE_MAX_VERTICES} vertices, got {n}")
    _require_connected(graph)
    I, J, M, deg = _edge_arrays(graph)
    B = null_space(deg[None, :]) if constrained else np.eye(n)
    dof = B.shape[1]
    if grid is None:
        grid = max(5, int(round(3e5 ** (1.0 / dof))))
        grid += grid % 2 == 0  # odd grids contain the axes
    axis = np.linspace(-1.0, 1.0, grid)

    def ratios(C):
        phi = C @ B.T
        a = np.abs(phi)
        num = phi[:, I] * phi[:, J] @ M
        den = a[:, I] * a[:, J] @ M
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(den > DEN_FLOOR, num / den, -np.inf)

    mesh = np.stack(np.meshgrid(*([axis] * dof), indexing="ij"), axis=-1).reshape(-1, dof)
    mesh = mesh[np.max(np.abs(mesh), axis=1) > 0]
    r = ratios(mesh)
    order = np.argsort(-r)[:max(refine, 1)]

    def objective(c):
        v = ratios(c[None, :])[0]
        return -v if np.isfinite(v) else 2.0

    best_c, best_v = mesh[order[0]], r[order[0]]
    for idx in order:
        res = optimize.minimize(objective, mesh[idx], method="Nelder-Mead",
                                options={"xatol": 1e-12, "fatol": 1e-15,
                                         "maxiter": 20_000, "maxfev": 40_000})
        if -res.fun > best_v:
            best_c, best_v = res.x, -res.fun
    if not np.isfinite(best_v):
        raise DegenerateDenominator("no grid point has a positive denominator")
    witness = B @ best_c
    return CosineEstimate(value=cosine_ratio(graph, witness), witness=witness,
                          certified=True, restarts_used=len(order), dim=1)


@dataclass(frozen=True)
class AMatrix:
    anchor: Simplex
    faces: tuple[Simplex, ...]
    entries: np.ndarray
    min_eigenvalue: float


def build_A(complex: SimplicialComplex, gamma, cos_source: Mapping) -> AMatrix:
    """
    Cosine matrix of a ``(k+1)``-simplex ``gamma``: rows and columns are its
    ``k``-faces, the diagonal is 1 and entry ``(a, b)`` is ``-cos`` of the
    link of the shared ``(k-1)``-face ``a & b``.
    """
    gamma = simplex(gamma)
    if gamma not in complex.weight:
        raise KeyError(f"{gamma} is not a face of the complex")
    cos = {}
    for key, val in cos_source.items():
        key = (key,) if isinstance(key, (int, np.integer)) else key
        cos[simplex(key)] = float(val)
    k = len(gamma) - 2
    fcs = list(combinations(gamma, k + 1))
    A = np.eye(len(fcs))
    for i, j in combinations(range(len(fcs)), 2):
        shared = tuple(sorted(set(fcs[i]) & set(fcs[j])))
        if shared not in cos:
            raise MissingCos(f"no cosine for the link of {shared}")
        A[i, j] = A[j, i] = -cos[shared]
    w, _ = symmetric_eig(A, method="jacobi")
    return AMatrix(anchor=gamma, faces=tuple(fcs), entries=A,
                   min_eigenvalue=float(w[0]))


def link_cosines(complex: SimplicialComplex, estimator="oracle", dim=1,
                 restarts=100, seed=0, grid=None) -> dict[Simplex, CosineEstimate]:
    """Reduced cosine of every vertex link of a 2-complex."""
    out = {}
    for v in complex.faces_by_dim[0]:
        g = skeleton(link(complex, v))
        if count_components(g.vertices, g.edges) != 1:
            raise DisconnectedLink(f"link of {v} is disconnected", simplex=v)
        if estimator == "oracle":
            out[v] = oracle_cos_r(g, grid=grid)
        elif estimator == "estimate":
            out[v] = estimate_cos_r(g, dim=dim, restarts=restarts, seed=seed)
        else:
            raise ValueError(f"unknown estimator {estimator!r}")
    return out


def check_theorem2_2d(complex: SimplicialComplex, estimator="oracle",
                      cos_table: Mapping | None = None, dim=1, restarts=100,
                      seed=0, grid=None) -> CriterionReport:
    """
    Positive definiteness of the 3x3 cosine matrix on every triangle.

    Cosines come from ``cos_table`` (vertex id -> value) when given, else
    from ``estimator`` (``"oracle"`` or ``"estimate"``) on the vertex links.
    """
    _require_2d(complex)
    notes = []
    if cos_table is not None:
        cos = dict(cos_table)
        notes.append("cosines supplied by the user")
    else:
        est = link_cosines(complex, estimator, dim=dim, restarts=restarts,
                           seed=seed, grid=grid)
        cos = {v: e.value for v, e in est.items()}
        if estimator == "estimate":
            notes.append(HEURISTIC_NOTE)
    rows = []
    for tri in complex.faces_by_dim[2]:
        A = build_A(complex, tri, cos)
        rows.append(AnchorResult(tri, {"min_eigenvalue": A.min_eigenvalue},
                                 A.min_eigenvalue > STRICT))
    return CriterionReport("thm2", rows, notes=notes)
