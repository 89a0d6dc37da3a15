"""
Minimal thickness for rank-3 diagrams
=====================================

For a triangle of Coxeter labels, each vertex link is a generalized polygon
with parameters (q, q). Scan q and report the first value passing each local
criterion. Existence of such geometries is not checked.
"""

import itertools

from linkgap.criteria import diagram_scan
from linkgap.polygons import GONALITIES

scan = diagram_scan((2, 3, 6), 10)
for row in scan.rows:
    print(row.q, [f"{x:.4f}" for x in row.lambdas],
          "zuk", row.zuk, "thm1", row.thm1)

###############################################################################
# Across all label triples the triangle criterion never needs a larger q
# than the edge criterion, and sometimes needs a strictly smaller one.

gaps = []
for labels in itertools.combinations_with_replacement(GONALITIES, 3):
    r = diagram_scan(labels, 30)
    if r.min_q_thm1 != r.min_q_zuk:
        gaps.append((labels, r.min_q_thm1, r.min_q_zuk))
for labels, t, z in gaps:
    print(labels, "thm1", t, "zuk", z)
