"""
Local criteria on the Lyons geometry
====================================

A finite 2-dimensional geometry acted on by the Lyons group has vertex links
of three kinds: a complete bipartite graph, a projective plane of order 5 and
a generalized hexagon of order (5, 5). Only the link gaps matter for the
local criteria, so one abstract triangle carrying the three gaps is enough.
"""

from math import sqrt

from linkgap.criteria import check_general, check_theorem1_2d, check_zuk_2d
from linkgap.report import LYONS_LINKS, builtin

tri, gaps = builtin("lyons")
for vertex, p in zip(sorted(gaps), LYONS_LINKS):
    print(f"vertex {vertex}: {p.m}-gon (s, t) = ({p.s}, {p.t})  lambda = {gaps[vertex]:.9f}")

###############################################################################
# The edge-wise condition asks for lambda_u + lambda_v > 1 on every edge. The
# projective plane and the hexagon fall just short.

zuk = check_zuk_2d(tri, gaps)
for row in zuk.per_simplex:
    print(row.anchor, f"{row.margins['sum']:+.7f}", "pass" if row.passed else "FAIL")
print("closed form:", 1 - (sqrt(5) + sqrt(15)) / 6)

###############################################################################
# The triangle-wise condition passes: the gap sum clears 3/2 and the
# pairwise products of the edge values are positive.

thm1 = check_theorem1_2d(tri, gaps)
(row,) = thm1.per_simplex
print(row.margins, thm1.passed)

###############################################################################
# The same verdict comes out of the root criterion: both stationary values
# of the constrained quadratic form are positive.

general = check_general(tri, 1, 2, 1e-9, gaps)
print("smallest root:", general.per_simplex[0].margins["min_root"], general.passed)
