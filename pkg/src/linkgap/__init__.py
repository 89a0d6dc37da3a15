"""
linkgap: local spectral and cosine criteria for vanishing of L2-cohomology
(and property (T)) on finite simplicial complexes.
"""
from .complex import (
    Diagnostics,
    Link,
    Simplex,
    SimplicialComplex,
    build_complex,
    faces,
    link,
    multiplicity,
    validate,
)
from .cosine import (
    AMatrix,
    CosineEstimate,
    build_A,
    check_theorem2_2d,
    estimate_cos_r,
    oracle_cos_r,
)
from .criteria import (
    CriterionReport,
    LambdaBar,
    check_bs,
    check_general,
    check_theorem1_2d,
    check_zuk_2d,
    diagram_scan,
    lambda_bar_all,
)
from .pkl import (
    PklSystem,
    RootReport,
    build_system,
    constrained_roots,
    det_roots,
    eval_det,
)
from .polygons import (
    PolygonParams,
    complete_bipartite,
    feit_higman_lambda,
    projective_plane_incidence,
)
from .spectral import (
    SpectralSummary,
    WeightedGraph,
    link_lambda,
    skeleton,
    spectrum,
)

__version__ = "0.1.0"
