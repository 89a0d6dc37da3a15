"""
Spectral gaps of generalized polygons
=====================================

Build the incidence graphs of small projective planes, compute their
normalized Laplacian spectra and compare the smallest positive eigenvalue
with the closed form 1 - sqrt(q) / (q + 1).
"""

from math import sqrt

import numpy as np

from linkgap.polygons import (
    PolygonParams,
    complete_bipartite,
    feit_higman_lambda,
    girth_and_diameter,
    projective_plane_incidence,
)
from linkgap.spectral import spectrum

for q in (2, 3, 5, 7):
    g = projective_plane_incidence(q)
    s = spectrum(g)
    girth, diam = girth_and_diameter(g)
    print(f"PG(2,{q}): {len(g)} vertices, girth {girth}, diameter {diam}, "
          f"lambda {s.lambda_norm:.12f} vs {1 - sqrt(q) / (q + 1):.12f}")

###############################################################################
# Complete bipartite graphs are the generalized 2-gons; their gap is exactly 1.

print(spectrum(complete_bipartite(3, 5)).eigenvalues.round(12) + 0.0)

###############################################################################
# Closed forms for every gonality with a thick example.

for m in (2, 3, 4, 6, 8):
    lams = [feit_higman_lambda(PolygonParams(m, s, s if m == 3 else 2))
            for s in (2, 3, 4)]
    print(m, np.round(lams, 6))
