import itertools

import pytest

from linkgap.complex import build_complex
from linkgap.polygons import projective_plane_incidence

OCTAHEDRON = [[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)]
TETRA_BOUNDARY = [list(t) for t in itertools.combinations(range(4), 3)]
SIMPLEX4_BOUNDARY = [list(t) for t in itertools.combinations(range(5), 4)]
# boundary of the 4-dimensional cross-polytope: vertex links are octahedra
CROSS16 = [[a, b, c, d] for a in (0, 1) for b in (2, 3) for c in (4, 5) for d in (6, 7)]
# 7-vertex torus
TORUS7 = [sorted([i % 7, (i + 1) % 7, (i + 3) % 7]) for i in range(7)] + \
         [sorted([i % 7, (i + 2) % 7, (i + 3) % 7]) for i in range(7)]
BOWTIE = [[0, 1, 2], [0, 3, 4]]
TWO_TRIANGLES = [[0, 1, 2], [0, 1, 3]]


def heawood_cone():
    """Cone with apex 100 over the Heawood graph."""
    g = projective_plane_incidence(2)
    return [[100, u, v] for u, v in g.edges]


TEST_COMPLEXES = {
    "triangle": [[0, 1, 2]],
    "two_triangles": TWO_TRIANGLES,
    "bowtie": BOWTIE,
    "octahedron": OCTAHEDRON,
    "tetra_boundary": TETRA_BOUNDARY,
    "simplex4_boundary": SIMPLEX4_BOUNDARY,
    "cross16": CROSS16,
    "torus7": TORUS7,
    "heawood_cone": heawood_cone(),
}


@pytest.fixture
def octahedron():
    return build_complex(OCTAHEDRON)


@pytest.fixture
def triangle():
    return build_complex([[0, 1, 2]])


@pytest.fixture
def bowtie():
    return build_complex(BOWTIE)


@pytest.fixture(params=sorted(TEST_COMPLEXES))
def any_complex(request):
    return request.param, build_complex(TEST_COMPLEXES[request.param])


# acceptance summary: test_acceptance appends (criterion, passed, detail)
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
