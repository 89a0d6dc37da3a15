"""
Normalized Laplacian spectra of weighted link graphs.

On a link of dimension ``D`` the upper Laplacian on 0-cochains equals
``D * (I - Dg^-1 W)`` because every vertex weight of the link satisfies
``sum_v m(u, v) = D * m(u)``. We therefore diagonalize the symmetric
normalized operator ``I - Dg^-1/2 W Dg^-1/2`` once and report both the
normalized gap and the gap rescaled by ``D``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .complex import Link, SimplicialComplex, count_components, link
from .errors import DisconnectedLink, LinkTooSmall, NotConverged

ZERO_TOL = 1e-9

__all__ = [
    "WeightedGraph",
    "SpectralSummary",
    "ZERO_TOL",
    "graph_from_edges",
    "skeleton",
    "normalized_laplacian",
    "jacobi_eigh",
    "symmetric_eig",
    "spectrum",
    "link_lambda",
]


@dataclass(frozen=True)
class WeightedGraph:
    vertices: tuple[int, ...]
    edge_weight: Mapping[tuple[int, int], float]

    def __post_init__(self):
        for (u, v), w in self.edge_weight.items():
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not u < v:
                raise ValueError(f"edge key {(u, v)} must be increasing")
            if w <= 0:
                raise ValueError(f"edge {(u, v)} has non-positive weight {w}")

    @property
    def vertex_weight(self) -> dict[int, float]:
        deg = {v: 0.0 for v in self.vertices}
        for (u, v), w in self.edge_weight.items():
            deg[u] += w
            deg[v] += w
        return deg

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(self.edge_weight)

    def __len__(self):
        return len(self.vertices)

    def adjacency(self) -> np.ndarray:
        """Dense symmetric edge-weight matrix in ``vertices`` order."""
        index = {v: i for i, v in enumerate(self.vertices)}
        W = np.zeros((len(index), len(index)))
        for (u, v), w in self.edge_weight.items():
            W[index[u], index[v]] = W[index[v], index[u]] = w
        return W


def graph_from_edges(edges, weights=None) -> WeightedGraph:
    """Graph on the endpoints of ``edges``; unit weights unless given."""
    ew = {}
    for i, (u, v) in enumerate(edges):
        key = (min(u, v), max(u, v))
        ew[key] = 1.0 if weights is None else float(weights[i])
    verts = sorted({x for e in ew for x in e})
    return WeightedGraph(vertices=tuple(verts), edge_weight=ew)


def skeleton(lk: Link | SimplicialComplex) -> WeightedGraph:
    """1-skeleton of a link, edges weighted by the inherited multiplicity."""
    cx = lk.complex if isinstance(lk, Link) else lk
    if cx.n < 1:
        raise LinkTooSmall("link is 0-dimensional and has no edges")
    ew = {e: float(cx.weight[e]) for e in cx.faces_by_dim[1]}
    return WeightedGraph(vertices=cx.vertices, edge_weight=ew)


def normalized_laplacian(graph: WeightedGraph) -> np.ndarray:
    W = graph.adjacency()
    deg = W.sum(axis=1)
    if np.any(deg <= 0):
        raise ValueError("graph has an isolated vertex")
    d = 1.0 / np.sqrt(deg)
    return np.eye(len(deg)) - d[:, None] * W * d[None, :]


def jacobi_eigh(A, max_sweeps=100, tol=1e-12):
    """
    Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Parameters
    ----------
    A : (n, n) array_like
        Symmetric input.
    max_sweeps : int
        Cap on full cyclic sweeps.
    tol : float
        Stop once the off-diagonal Frobenius norm is below
        ``tol * ||A||_F``.

    Returns
    -------
    w : (n,) ndarray
        Eigenvalues, ascending.
    Q : (n, n) ndarray
        Orthogonal eigenvectors as columns, ``A = Q diag(w) Q.T``.
    """
    a = np.array(A, dtype=float)
    n = a.shape[0]
    Q = np.eye(n)
    scale = np.linalg.norm(a)
    if n < 2 or scale == 0.0:
        w = np.diag(a).copy()
        order = np.argsort(w)
        return w[order], Q[:, order]

    def off(m):
        return np.linalg.norm(m - np.diag(np.diag(m)))

    for _ in range(max_sweeps):
        if off(a) <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    t = t if theta >= 0.0 else -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                qp = Q[:, p].copy()
                qq = Q[:, q].copy()
                Q[:, p] = c * qp - s * qq
                Q[:, q] = s * qp + c * qq
    else:
        if off(a) > tol * scale:
            raise NotConverged(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], Q[:, order]


def symmetric_eig(A, method="auto"):
    """
    Eigendecomposition of a symmetric matrix.

    ``method`` is ``"jacobi"``, ``"lapack"`` or ``"auto"`` (Jacobi up to
    24 rows, LAPACK beyond).
    """
    A = np.asarray(A, dtype=float)
    if method == "auto":
        method = "jacobi" if A.shape[0] <= 24 else "lapack"
    if method == "jacobi":
        return jacobi_eigh(A)
    if method == "lapack":
        w, Q = np.linalg.eigh(A)
        return w, Q
    raise ValueError(f"unknown eigensolver {method!r}")


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: np.ndarray
    lambda_norm: float | None
    components: int
    link_dim_scale: int

    @property
    def lambda_scaled(self) -> float | None:
        if self.lambda_norm is None:
            return None
        return self.link_dim_scale * self.lambda_norm

    @property
    def zero_multiplicity(self) -> int:
        return int(np.sum(self.eigenvalues <= ZERO_TOL))


def spectrum(graph: WeightedGraph, link_dim_scale: int = 1,
             method="auto") -> SpectralSummary:
    """Full normalized Laplacian spectrum and its smallest positive eigenvalue."""
    if len(graph) == 0:
        raise ValueError("empty graph")
    L = normalized_laplacian(graph)
    w, _ = symmetric_eig(L, method=method)
    w = np.sort(w)
    positive = w[w > ZERO_TOL]
    ncomp = count_components(graph.vertices, graph.edges)
    zeros = int(np.sum(w <= ZERO_TOL))
    if zeros != ncomp:
        raise NotConverged(
            f"zero-eigenvalue multiplicity {zeros} disagrees with "
            f"{ncomp} connected components")
    return SpectralSummary(
        eigenvalues=w,
        lambda_norm=float(positive[0]) if positive.size else None,
        components=ncomp,
        link_dim_scale=int(link_dim_scale),
    )


def link_lambda(complex: SimplicialComplex, tau, method="auto") -> SpectralSummary:
    """Spectrum of the link of ``tau`` with ``lambda_scaled`` in the scale of the
    upper Laplacian of the link."""
    lk = link(complex, tau)
    g = skeleton(lk)
    summary = spectrum(g, link_dim_scale=lk.dim, method=method)
    if summary.components != 1:
        raise DisconnectedLink(
            f"link of {lk.base} has {summary.components} components",
            simplex=lk.base)
    return summary
