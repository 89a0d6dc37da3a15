"""
Acceptance criteria, one test each. Every test records a PASS/FAIL line
that is printed in the terminal summary.
"""
import itertools
import json
import time
from math import comb, sqrt

import numpy as np
import pytest

import conftest
from conftest import TEST_COMPLEXES
from linkgap.cli import main
from linkgap.complex import build_complex, count_components, faces, link
from linkgap.cosine import estimate_cos_r, oracle_cos_r
from linkgap.criteria import (
    TRIANGLE,
    check_bs,
    check_general,
    check_theorem1_2d,
    check_zuk_2d,
    diagram_scan,
)
from linkgap.pkl import build_system, constrained_roots, det_roots
from linkgap.polygons import (
    GONALITIES,
    complete_bipartite,
    projective_plane_incidence,
)
from linkgap.spectral import (
    graph_from_edges,
    normalized_laplacian,
    skeleton,
    spectrum,
    symmetric_eig,
)


def record(name, ok, detail=""):
    conftest.ACCEPTANCE_LINES.append((name, bool(ok), detail))
    assert ok, f"{name}: {detail}"


def test_ac1_feit_higman_cross_validation():
    t0 = time.perf_counter()
    worst = 0.0
    for q in (2, 3, 5, 7, 11, 13):
        lam = spectrum(projective_plane_incidence(q)).lambda_norm
        worst = max(worst, abs(lam - (1 - sqrt(q) / (q + 1))))
    for a, b in ((2, 2), (3, 5), (6, 6)):
        worst = max(worst, abs(spectrum(complete_bipartite(a, b)).lambda_norm - 1.0))
    elapsed = time.perf_counter() - t0
    record("AC1 Feit-Higman cross-validation", worst <= 1e-9 and elapsed < 5,
           f"max error {worst:.2e}, {elapsed:.2f} s")


def test_ac2_lyons_end_to_end(capsys):
    code = main(["lyons", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    r5, r15 = sqrt(5), sqrt(15)
    zuk = 1 - (r5 + r15) / 6
    total = 1.5 - (r5 + r15) / 6
    # edge values lambda_u + lambda_v - 1 for the pairs (12), (13), (23)
    s12, s13, s23 = 1 - r5 / 6, 1 - r15 / 6, zuk
    prod = s12 * s13 + s12 * s23 + s13 * s23
    # the same product-sum in the mixed-number form 3 5/9 + 15 sqrt3/36 - (4/6)(sqrt5+sqrt15)
    printed = 32 / 9 + 15 * sqrt(3) / 36 - 4 / 6 * (r5 + r15)
    ok = (code == 0 and doc["verdict"] == "PASS"
          and not doc["zuk_passed"] and doc["thm1_passed"]
          and abs(doc["zuk_sum"] - zuk) <= 1e-6 and doc["zuk_sum"] < 0
          and abs(doc["thm1_sum"] - total) <= 1e-6
          and abs(doc["thm1_product_sum"] - prod) <= 1e-6
          and abs(prod - printed) <= 1e-12)
    record("AC2 Lyons example", ok,
           f"zuk {doc['zuk_sum']:.7f}, sum {doc['thm1_sum']:.7f}, "
           f"product-sum {doc['thm1_product_sum']:.7f}")


def test_ac3_quadratic_root_oracles():
    rng = np.random.default_rng(20240603)
    worst = 0.0
    for _ in range(200):
        S = rng.uniform(-2, 2, 3)
        system = build_system(1, 2, S)
        det = np.array(det_roots(system).roots)
        con = np.array(constrained_roots(system).roots)
        b = 2 * S.sum()
        c = S[0] * S[1] + S[0] * S[2] + S[1] * S[2]
        disc = np.sqrt(max(b * b - 12 * c, 0.0))
        quad = np.array(sorted([(b - disc) / 6, (b + disc) / 6]))
        worst = max(worst, np.max(np.abs(det - con)), np.max(np.abs(det - quad)),
                    np.max(np.abs(con - quad)))
    record("AC3 determinant/constrained/quadratic roots agree", worst <= 1e-8,
           f"max deviation {worst:.2e} over 200 triples")


def test_ac4_general_matches_theorem1():
    rng = np.random.default_rng(7)
    disagreements = 0
    for _ in range(500):
        bars = rng.uniform(-1, 1, 3)
        given = {i: b + 0.5 for i, b in enumerate(bars)}
        g = check_general(TRIANGLE, 1, 2, 1e-9, given).passed
        t = check_theorem1_2d(TRIANGLE, given).passed
        disagreements += g != t
    record("AC4 general(k=1,l=2) iff thm1", disagreements == 0,
           f"{disagreements} disagreements over 500 triples")


def test_ac5_degeneracy_detection():
    rng = np.random.default_rng(5)
    flagged = all(det_roots(build_system(k, l, rng.uniform(-2, 2, comb(l + 1, k + 1))))
                  .degenerate for k, l in ((0, 2), (0, 3), (1, 3)) for _ in range(20))
    never = not any(det_roots(build_system(k, k + 1, rng.uniform(-2, 2, k + 2))).degenerate
                    for k in range(4) for _ in range(50))
    record("AC5 degeneracy detection", flagged and never,
           f"degenerate flagged: {flagged}, l=k+1 never degenerate: {never}")


def test_ac6_scanner_properties():
    t0 = time.perf_counter()
    ordered = strict = homogeneous = True
    witness = None
    for labels in itertools.product(GONALITIES, repeat=3):
        r = diagram_scan(labels, 30)
        zq = r.min_q_zuk if r.min_q_zuk is not None else float("inf")
        tq = r.min_q_thm1 if r.min_q_thm1 is not None else float("inf")
        ordered &= tq <= zq
        if labels[0] == labels[1] == labels[2]:
            homogeneous &= tq == zq
        if labels == (2, 8, 8):
            witness = (r.min_q_thm1, r.min_q_zuk)
    strict = witness == (8, 12)
    elapsed = time.perf_counter() - t0
    record("AC6 scanner properties", ordered and strict and homogeneous and elapsed < 10,
           f"thm1<=zuk {ordered}, (2,8,8) -> {witness}, homogeneous {homogeneous}, "
           f"{elapsed:.2f} s")


SMALL_GRAPHS = {
    "K2": [(0, 1)],
    "P3": [(0, 1), (1, 2)],
    "K3": [(0, 1), (1, 2), (0, 2)],
    "C4": [(0, 1), (1, 2), (2, 3), (0, 3)],
    "P4": [(0, 1), (1, 2), (2, 3)],
    "K4": list(itertools.combinations(range(4), 2)),
    "K13": [(0, 1), (0, 2), (0, 3)],
    "C5": [(i, (i + 1) % 5) for i in range(5)],
    "K23": [(a, b) for a in (0, 1) for b in (2, 3, 4)],
    "C6": [(i, (i + 1) % 6) for i in range(6)],
    "K33": [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)],
    "W5": [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)],
}


def test_ac7_cosine_values():
    exact = {"K2": -1.0, "C4": 0.0, "K3": -0.6}
    errors = [abs(oracle_cos_r(graph_from_edges(SMALL_GRAPHS[k])).value - v)
              for k, v in exact.items()]
    worst_gap = 0.0
    for edges in SMALL_GRAPHS.values():
        g = graph_from_edges(edges)
        gap = oracle_cos_r(g).value - estimate_cos_r(g, dim=1, restarts=100, seed=0).value
        worst_gap = max(worst_gap, abs(gap))
    ok = errors[0] <= 1e-12 and max(errors) <= 1e-6 and worst_gap <= 5e-2
    record("AC7 cosine oracle values", ok,
           f"oracle error {max(errors):.1e}, estimator gap {worst_gap:.1e} "
           f"on {len(SMALL_GRAPHS)} graphs")


def _brute_multiplicity(tops, s):
    return sum(1 for t in tops if set(s) <= set(t))


def _invariant_failures(name, tops):
    cx = build_complex(tops)
    n = cx.n
    fails = []
    # tabulated weights agree with brute force, and the weight identity holds
    for k in range(n + 1):
        for s in faces(cx, k):
            if cx.weight[s] != _brute_multiplicity(tops, s):
                fails.append(f"{name}: m{s}")
    for k in range(n + 1):
        for l in range(k + 1, n + 1):
            for s in faces(cx, k):
                rhs = sum(cx.weight[g] for g in faces(cx, l) if set(s) <= set(g))
                if comb(n - k, l - k) * cx.weight[s] != rhs:
                    fails.append(f"{name}: identity {s} ({k},{l})")
    # link composition
    for u, v in faces(cx, 1) if n >= 2 else []:
        inner = link(link(cx, (u,)).complex, (v,)).complex
        direct = link(cx, (u, v)).complex
        if inner.weight != direct.weight:
            fails.append(f"{name}: composition {(u, v)}")
    # spectra of the 1-skeleton and of every link that is at least a graph
    graphs = [skeleton(cx)]
    for k in range(n - 1):
        graphs += [skeleton(link(cx, tau)) for tau in faces(cx, k)]
    for g in graphs:
        L = normalized_laplacian(g)
        w, Q = symmetric_eig(L)
        if np.max(np.abs(L - Q @ np.diag(w) @ Q.T)) > 1e-8:
            fails.append(f"{name}: residual")
        if w.min() < -1e-9 or w.max() > 2 + 1e-9:
            fails.append(f"{name}: range")
        if int(np.sum(w <= 1e-9)) != count_components(g.vertices, g.edges):
            fails.append(f"{name}: zero multiplicity")
    return fails


def test_ac8_invariant_suite():
    t0 = time.perf_counter()
    fails = []
    for name, tops in sorted(TEST_COMPLEXES.items()):
        fails += _invariant_failures(name, tops)
    elapsed = time.perf_counter() - t0
    record("AC8 invariant suite", not fails and elapsed < 30,
           f"{len(TEST_COMPLEXES)} complexes, {len(fails)} failures {fails[:3]}, "
           f"{elapsed:.2f} s")


def test_ac9_octahedron_smoke(capsys):
    codes = [main(argv) for argv in (
        ["validate", "octahedron"],
        ["check", "octahedron", "--criterion", "zuk"],
        ["check", "octahedron", "--criterion", "thm1"],
        ["check", "octahedron", "--criterion", "bs", "--k", "1", "--eps", "0.4"],
        ["check", "octahedron", "--criterion", "general", "--k", "1", "--l", "2",
         "--eps", "0.5"],
    )]
    capsys.readouterr()
    cx = build_complex(conftest.OCTAHEDRON)
    margins = []
    margins += [abs(a.margins["sum"] - 1.0) for a in check_zuk_2d(cx).per_simplex]
    margins += [max(abs(a.margins["sum"] - 1.5), abs(a.margins["product_sum"] - 3.0))
                for a in check_theorem1_2d(cx).per_simplex]
    margins += [abs(a.margins["lambda_bar"] - 0.5) for a in check_bs(cx, 1, 0.4).per_simplex]
    margins += [abs(a.margins["min_root"] - 1.0)
                for a in check_general(cx, 1, 2, 0.5).per_simplex]
    worst = max(margins)
    record("AC9 octahedron smoke test", codes == [0] * 5 and worst <= 1e-9,
           f"exit codes {codes}, max margin error {worst:.1e}")
