"""
Bordered incidence determinant on the faces of a standard simplex and the
root problem it induces.

For an ``l``-simplex with vertices ``0..l`` let ``F`` be its ``k``-faces,
``F'`` its ``(k+1)``-faces and ``C`` the signed incidence matrix
(``C[nu, sigma] = (-1)**i`` when ``sigma`` is ``nu`` with its ``i``-th
vertex removed). With ``x_sigma = lam - S_sigma`` the determinant of::

    [[diag(x), C.T],
     [C,       0  ]]

is a polynomial in ``lam`` whose roots are the stationary values of
``sum S_sigma x_sigma**2`` on the unit sphere of ``ker C``. Two routes
compute them: interpolating the determinant, and diagonalizing the
compression of ``diag(S)`` to ``ker C``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

import numpy as np
from scipy import linalg

from .errors import BadDims, EmptyKernel, MissingS, NotSupported

DET_ZERO_TOL = 1e-10
IMAG_TOL = 1e-8

__all__ = [
    "PklSystem",
    "RootReport",
    "standard_faces",
    "incidence_matrix",
    "build_system",
    "bordered_matrix",
    "eval_det",
    "det_roots",
    "constrained_roots",
]


def standard_faces(l: int, k: int) -> list[tuple[int, ...]]:
    """``k``-faces of the standard ``l``-simplex, lexicographic."""
    return list(combinations(range(l + 1), k + 1))


def incidence_matrix(rows: Sequence[tuple], cols: Sequence[tuple]) -> np.ndarray:
    """Signed incidence ``[nu : sigma]`` between ``(k+1)``-faces ``rows`` and
    ``k``-faces ``cols``."""
    index = {s: j for j, s in enumerate(cols)}
    C = np.zeros((len(rows), len(cols)))
    for i, nu in enumerate(rows):
        for pos in range(len(nu)):
            sigma = nu[:pos] + nu[pos + 1:]
            C[i, index[sigma]] = (-1) ** pos
    return C


@dataclass(frozen=True)
class PklSystem:
    k: int
    l: int
    F: tuple[tuple[int, ...], ...]
    Fprime: tuple[tuple[int, ...], ...]
    C: np.ndarray
    S: np.ndarray

    @property
    def size(self) -> int:
        return len(self.F) + len(self.Fprime)


@dataclass(frozen=True)
class RootReport:
    method: str
    roots: tuple[float, ...]
    degenerate: bool = False

    @property
    def min_root(self) -> float | None:
        if self.degenerate or not self.roots:
            return None
        return self.roots[0]


def build_system(k: int, l: int, S) -> PklSystem:
    """
    Assemble the incidence data for the pair ``(k, l)``.

    ``S`` is either a sequence aligned with :func:`standard_faces` order or
    a mapping keyed by those face tuples.
    """
    if not (0 <= k < l):
        raise BadDims(f"need 0 <= k < l, got k={k}, l={l}")
    F = standard_faces(l, k)
    Fp = standard_faces(l, k + 1)
    if isinstance(S, Mapping):
        missing = [f for f in F if f not in S]
        if missing:
            raise MissingS(f"no S value for faces {missing}")
        values = np.array([float(S[f]) for f in F])
    else:
        values = np.asarray(S, dtype=float).ravel()
        if values.size != len(F):
            raise MissingS(f"expected {len(F)} S values, got {values.size}")
    return PklSystem(k=k, l=l, F=tuple(F), Fprime=tuple(Fp),
                     C=incidence_matrix(Fp, F), S=values)


def bordered_matrix(system: PklSystem, lam: float) -> np.ndarray:
    nf, nfp = len(system.F), len(system.Fprime)
    M = np.zeros((nf + nfp, nf + nfp))
    M[:nf, :nf] = np.diag(lam - system.S)
    M[:nf, nf:] = system.C.T
    M[nf:, :nf] = system.C
    return M


def eval_det(system: PklSystem, lam: float) -> float:
    """Determinant of the bordered matrix at ``x_sigma = lam - S_sigma``
    (LU with partial pivoting)."""
    with warnings.catch_warnings():
        # an exactly singular pivot is a legitimate zero determinant
        warnings.simplefilter("ignore", linalg.LinAlgWarning)
        lu, piv = linalg.lu_factor(bordered_matrix(system, lam),
                                   check_finite=False)
    diag = np.diag(lu)
    swaps = np.count_nonzero(piv != np.arange(piv.size))
    return float((-1) ** swaps * np.prod(diag))


def _chebyshev_nodes(a: float, b: float, count: int) -> np.ndarray:
    j = np.arange(count)
    t = np.cos((2 * j + 1) * np.pi / (2 * count))
    return 0.5 * (a + b) + 0.5 * (b - a) * t


def _newton_to_monomial(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Monomial coefficients (highest degree first) of the interpolant."""
    n = x.size
    coef = y.astype(float).copy()
    for j in range(1, n):
        coef[j:] = (coef[j:] - coef[j - 1:-1]) / (x[j:] - x[:n - j])
    poly = np.array([coef[-1]])
    for j in range(n - 2, -1, -1):
        # poly * (t - x[j]) + coef[j]
        poly = np.convolve(poly, [1.0, -x[j]])
        poly[-1] += coef[j]
    return poly


def det_roots(system: PklSystem) -> RootReport:
    """
    Real roots in ``lam`` of the bordered determinant.

    The determinant is sampled at ``|F| + 1`` Chebyshev nodes spanning
    ``[min S - 1, max S + 1]``; an identically vanishing sample set is
    reported as degenerate before the ``l == k + 1`` restriction applies.
    """
    nf = len(system.F)
    lo, hi = system.S.min() - 1.0, system.S.max() + 1.0
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    nodes = _chebyshev_nodes(lo, hi, nf + 1)
    values = np.array([eval_det(system, x) for x in nodes])
    if np.all(np.abs(values) <= DET_ZERO_TOL):
        return RootReport(method="determinant-interpolation", roots=(),
                          degenerate=True)
    if system.l != system.k + 1:
        raise NotSupported(
            f"root extraction needs l = k + 1, got k={system.k}, l={system.l}")
    # interpolate in the rescaled variable t = (lam - mid) / half
    coeffs = _newton_to_monomial((nodes - mid) / half, values)
    lead = np.max(np.abs(coeffs))
    first = np.argmax(np.abs(coeffs) > 1e-9 * lead)
    coeffs = coeffs[first:]
    roots = np.roots(coeffs) if coeffs.size > 1 else np.array([])
    real = np.sort(roots[np.abs(roots.imag) <= IMAG_TOL].real) * half + mid
    return RootReport(method="determinant-interpolation",
                      roots=tuple(float(r) for r in real))


def kernel_basis(C: np.ndarray, tol=1e-10) -> np.ndarray:
    """Orthonormal basis of ``ker C`` from a column-pivoted QR of ``C.T``."""
    ncols = C.shape[1]
    if C.shape[0] == 0:
        return np.eye(ncols)
    Q, R, _ = linalg.qr(C.T, mode="full", pivoting=True)
    d = np.abs(np.diag(R))
    rank = int(np.sum(d > tol * max(d.max(initial=0.0), 1.0)))
    return Q[:, rank:]


def constrained_roots(system: PklSystem) -> RootReport:
    """Eigenvalues of ``diag(S)`` compressed to ``ker C``: the stationary values
    of ``sum S x**2`` over unit vectors satisfying the incidence constraints."""
    Q = kernel_basis(system.C)
    if Q.shape[1] == 0:
        raise EmptyKernel("incidence matrix has trivial kernel")
    H = Q.T @ (system.S[:, None] * Q)
    w = np.linalg.eigvalsh(0.5 * (H + H.T))
    return RootReport(method="constrained-eigenvalue",
                      roots=tuple(float(x) for x in np.sort(w)))


def face_count(l: int, k: int) -> int:
    return comb(l + 1, k + 1)
