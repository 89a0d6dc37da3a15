"""
Generalized polygons: closed-form spectral gaps and small explicit
incidence graphs for cross-checking them.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import sqrt

import networkx as nx

from .errors import BadGonality, BadParams, NotPrime, TooLarge, TooSmall
from .spectral import WeightedGraph

GONALITIES = (2, 3, 4, 6, 8)
MAX_PRIME = 13

__all__ = [
    "GONALITIES",
    "PolygonParams",
    "feit_higman_lambda",
    "complete_bipartite",
    "projective_plane_incidence",
    "girth_and_diameter",
]


@dataclass(frozen=True)
class PolygonParams:
    m: int
    s: int
    t: int | None = None

    def __post_init__(self):
        if self.m not in GONALITIES:
            raise BadGonality(
                f"no thick generalized {self.m}-gon; m must be one of {GONALITIES}")
        if self.t is None:
            object.__setattr__(self, "t", self.s)
        if self.s < 1 or self.t < 1:
            raise BadParams(f"parameters must be >= 1, got s={self.s}, t={self.t}")
        if self.m == 3 and self.s != self.t:
            raise BadParams(f"projective planes have s == t, got ({self.s}, {self.t})")

    @property
    def thick(self) -> bool:
        return self.s >= 2 and self.t >= 2


def feit_higman_lambda(p: PolygonParams) -> float:
    """Smallest positive eigenvalue of the normalized Laplacian of a generalized
    ``m``-gon with parameters ``(s, t)``."""
    s, t = float(p.s), float(p.t)
    denom = (s + 1) * (t + 1)
    if p.m == 2:
        return 1.0
    if p.m == 3:
        return 1.0 - sqrt(s) / (s + 1)
    if p.m == 4:
        return 1.0 - sqrt((s + t) / denom)
    if p.m == 6:
        return 1.0 - sqrt((s + t + sqrt(s * t)) / denom)
    return 1.0 - sqrt((s + t + sqrt(2 * s * t)) / denom)


def complete_bipartite(a: int, b: int) -> WeightedGraph:
    """``K_{a,b}`` with unit weights: sides are ``0..a-1`` and ``a..a+b-1``."""
    if a < 2 or b < 2:
        raise TooSmall(f"K_{{{a},{b}}} is not a thick generalized 2-gon")
    ew = {(i, a + j): 1.0 for i in range(a) for j in range(b)}
    return WeightedGraph(vertices=tuple(range(a + b)), edge_weight=ew)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalized representatives (first nonzero coordinate 1) of the
    1-dimensional subspaces of ``GF(q)^3``."""
    pts = []
    for v in product(range(q), repeat=3):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def projective_plane_incidence(q: int) -> WeightedGraph:
    """
    Point-line incidence graph of ``PG(2, q)`` for a prime ``q``.

    Points are vertices ``0..N-1`` and lines ``N..2N-1`` with
    ``N = q**2 + q + 1``; a point lies on a line when their coordinate
    vectors are orthogonal mod ``q``.
    """
    if not _is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    if q > MAX_PRIME:
        raise TooLarge(f"q={q} exceeds the supported bound {MAX_PRIME}")
    pts = _projective_points(q)
    N = len(pts)
    ew = {}
    for i, p in enumerate(pts):
        for j, L in enumerate(pts):
            if (p[0] * L[0] + p[1] * L[1] + p[2] * L[2]) % q == 0:
                ew[(i, N + j)] = 1.0
    return WeightedGraph(vertices=tuple(range(2 * N)), edge_weight=ew)


def girth_and_diameter(graph: WeightedGraph) -> tuple[int, int]:
    """Girth and diameter of the underlying simple graph; a generalized
    ``m``-gon has girth ``2m`` and diameter ``m``."""
    G = nx.Graph()
    G.add_nodes_from(graph.vertices)
    G.add_edges_from(graph.edges)
    return int(nx.girth(G)), int(nx.diameter(G))
