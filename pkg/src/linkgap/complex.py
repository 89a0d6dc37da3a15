"""
Finite pure simplicial complexes with top-simplex multiplicities.

Simplices are stored as strictly increasing tuples of non-negative integer
vertex ids. For a pure ``n``-dimensional complex the multiplicity ``m(s)``
of a face ``s`` is the number of ``n``-simplices containing it, so
``m(s) >= 1`` for every stored face and ``m(s) == 1`` for top simplices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import (
    DimOutOfRange,
    DuplicateTopError,
    EmptyComplexError,
    NonPureError,
    TopFaceError,
    UnknownFace,
)

Simplex = tuple[int, ...]

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "Link",
    "Diagnostics",
    "simplex",
    "build_complex",
    "faces",
    "multiplicity",
    "link",
    "validate",
]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical (sorted) representative of an unordered simplex."""
    s = tuple(sorted(int(v) for v in vertices))
    if len(set(s)) != len(s):
        raise ValueError(f"repeated vertex in simplex {s}")
    return s


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable pure complex; build with :func:`build_complex`."""

    n: int
    faces_by_dim: tuple[tuple[Simplex, ...], ...]
    weight: Mapping[Simplex, int] = field(repr=False)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.faces_by_dim[0])

    @property
    def top(self) -> tuple[Simplex, ...]:
        return self.faces_by_dim[self.n]

    def __contains__(self, s) -> bool:
        return tuple(s) in self.weight

    def relabel(self, mapping: Mapping[int, int]) -> "SimplicialComplex":
        """Complex with vertex ``v`` renamed to ``mapping[v]``."""
        return build_complex([[mapping[v] for v in t] for t in self.top])


def build_complex(maximal_simplices) -> SimplicialComplex:
    """
    Build a pure complex from its top-dimensional simplices.

    Every face of every listed simplex is added and ``m(face)`` is the
    number of listed simplices containing it.

    Raises
    ------
    EmptyComplexError, NonPureError, DuplicateTopError
    """
    tops = [simplex(t) for t in maximal_simplices]
    if not tops:
        raise EmptyComplexError("no maximal simplices given")
    sizes = {len(t) for t in tops}
    if len(sizes) != 1:
        raise NonPureError(
            f"maximal simplices have mixed cardinalities {sorted(sizes)}")
    (size,) = sizes
    if size == 0:
        raise EmptyComplexError("maximal simplices must be non-empty")
    if any(v < 0 for t in tops for v in t):
        raise ValueError("vertex ids must be non-negative integers")
    if len(set(tops)) != len(tops):
        dup = next(t for t in tops if tops.count(t) > 1)
        raise DuplicateTopError(f"maximal simplex {dup} listed twice")

    n = size - 1
    weight: dict[Simplex, int] = {}
    for t in tops:
        for k in range(n + 1):
            for s in combinations(t, k + 1):
                weight[s] = weight.get(s, 0) + 1
    by_dim: list[list[Simplex]] = [[] for _ in range(n + 1)]
    for s in weight:
        by_dim[len(s) - 1].append(s)
    return SimplicialComplex(
        n=n,
        faces_by_dim=tuple(tuple(sorted(d)) for d in by_dim),
        weight=dict(sorted(weight.items())),
    )


def faces(complex: SimplicialComplex, k: int) -> list[Simplex]:
    """All ``k``-simplices in lexicographic order."""
    if not 0 <= k <= complex.n:
        raise DimOutOfRange(f"k={k} outside 0..{complex.n}")
    return list(complex.faces_by_dim[k])


def multiplicity(complex: SimplicialComplex, s) -> int:
    """Number of top simplices containing ``s``."""
    key = simplex(s)
    try:
        return complex.weight[key]
    except KeyError:
        raise UnknownFace(f"{key} is not a face of the complex") from None


@dataclass(frozen=True)
class Link:
    """Link of ``base``; ``complex.weight[eta]`` equals ambient ``m(base | eta)``."""

    base: Simplex
    complex: SimplicialComplex

    @property
    def dim(self) -> int:
        return self.complex.n


def link(complex: SimplicialComplex, tau) -> Link:
    """
    Link of ``tau``: simplices disjoint from ``tau`` whose join with it is
    a face. Its top simplices are ``t \\ tau`` for the top simplices ``t``
    containing ``tau``, so its multiplicities are inherited automatically.
    """
    base = simplex(tau)
    if base not in complex.weight:
        raise UnknownFace(f"{base} is not a face of the complex")
    if len(base) - 1 == complex.n:
        raise TopFaceError(f"{base} is a top simplex; its link is empty")
    bset = set(base)
    tops = [tuple(v for v in t if v not in bset)
            for t in complex.top if bset.issubset(t)]
    return Link(base=base, complex=build_complex(tops))


def count_components(vertices, edges) -> int:
    """Connected components of the graph on ``vertices`` with ``edges``."""
    index = {v: i for i, v in enumerate(vertices)}
    if not index:
        return 0
    rows = [index[u] for u, _ in edges]
    cols = [index[v] for _, v in edges]
    adj = coo_matrix(([1] * len(rows), (rows, cols)),
                     shape=(len(index), len(index)))
    ncomp, _ = connected_components(adj, directed=False)
    return int(ncomp)


def is_connected(complex: SimplicialComplex) -> bool:
    edges = complex.faces_by_dim[1] if complex.n >= 1 else ()
    return count_components(complex.vertices, edges) == 1


@dataclass
class Diagnostics:
    pure: bool
    connected: bool
    disconnected_links: list[Simplex]
    weight_identity_violations: list[tuple[int, int, Simplex]]

    @property
    def ok(self) -> bool:
        return (self.pure and self.connected and not self.disconnected_links
                and not self.weight_identity_violations)


def weight_identity_violations(complex: SimplicialComplex):
    """
    Faces breaking ``C(n-k, l-k) m(s) == sum of m(g) over l-faces g >= s``.

    Returned as ``(k, l, s)`` triples; empty for any complex produced by
    :func:`build_complex`.
    """
    n = complex.n
    bad = []
    for l in range(1, n + 1):
        sums: dict[Simplex, int] = {}
        for g in complex.faces_by_dim[l]:
            mg = complex.weight[g]
            for k in range(l):
                for s in combinations(g, k + 1):
                    sums[s] = sums.get(s, 0) + mg
        for k in range(l):
            for s in complex.faces_by_dim[k]:
                if comb(n - k, l - k) * complex.weight[s] != sums.get(s, 0):
                    bad.append((k, l, s))
    return bad


def validate(complex: SimplicialComplex) -> Diagnostics:
    """Purity, connectivity of the complex and of every link of dimension >= 1,
    and the weight identity for all ``(k, l)``."""
    pure = all(m >= 1 for m in complex.weight.values()) and all(
        complex.weight[t] == 1 for t in complex.top)
    bad_links = []
    for k in range(complex.n - 1):
        for tau in complex.faces_by_dim[k]:
            if not is_connected(link(complex, tau).complex):
                bad_links.append(tau)
    return Diagnostics(
        pure=pure,
        connected=is_connected(complex),
        disconnected_links=bad_links,
        weight_identity_violations=weight_identity_violations(complex),
    )
