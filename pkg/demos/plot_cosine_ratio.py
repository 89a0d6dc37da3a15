"""
The reduced cosine ratio of a link
==================================

The cosine of a weighted graph is the largest correlation along edges of a
function whose weighted mean is zero. A dense grid with local refinement
gives a certified value on tiny graphs; multi-start ascent gives a lower
bound on anything larger.
"""

import itertools

from linkgap.complex import build_complex
from linkgap.cosine import check_theorem2_2d, estimate_cos_r, oracle_cos_r
from linkgap.spectral import graph_from_edges

graphs = {
    "K2": [(0, 1)],
    "K3": [(0, 1), (1, 2), (0, 2)],
    "C4": [(0, 1), (1, 2), (2, 3), (0, 3)],
    "K4": list(itertools.combinations(range(4), 2)),
}
for name, edges in graphs.items():
    g = graph_from_edges(edges)
    exact = oracle_cos_r(g).value
    est = estimate_cos_r(g, restarts=50, seed=0).value
    print(f"{name}: oracle {exact:+.6f}  estimate {est:+.6f}")

###############################################################################
# The positive-definiteness check on the octahedron: every vertex link is a
# 4-cycle, whose cosine is 0, so each local matrix is the identity.

octa = build_complex([[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)])
rep = check_theorem2_2d(octa, estimator="oracle")
print(rep.passed, rep.epsilon)
