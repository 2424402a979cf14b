import numpy as np
import pytest
from hypothesis import given, settings
from scipy.spatial import Delaunay

from conftest import undirected_graphs
from robustgraphs.geometry import (
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    petersen,
    random_sites,
    star,
    unit_disk_graph,
)
from robustgraphs.graph import ScanStats, build_undirected
from robustgraphs.oracle import brute_girth, brute_triangle
from robustgraphs.outcomes import Girth, NoCycle, NotInDomain, Reason, Triangle, TriangleFree
from robustgraphs.udg import find_triangle_udg, girth_udg, planar_girth
from robustgraphs.witness import check_cycle, check_girth_outcome, check_triangle_outcome


def test_triangle_k3():
    assert find_triangle_udg(complete_graph(3)) == Triangle((0, 1, 2))


def test_triangle_star7_not_in_domain():
    out = find_triangle_udg(star(7))
    assert isinstance(out, NotInDomain)
    assert out.reason is Reason.HIGH_DEGREE_NO_TRIANGLE
    assert out.witness == tuple(range(8))
    assert check_triangle_outcome(star(7), out) == []


def test_triangle_star6_uses_six_neighbors():
    out = find_triangle_udg(star(6))
    assert out.witness == tuple(range(7))
    assert check_triangle_outcome(star(6), out) == []


def test_star5_is_low_degree_and_triangle_free():
    assert find_triangle_udg(star(5)) == TriangleFree()


def test_triangle_c5():
    assert find_triangle_udg(cycle_graph(5)) == TriangleFree()


def test_high_degree_finds_lexicographically_first_pair():
    # center 0 with 8 leaves; leaves 3-5 and 2-6 adjacent: pair (2, 6) comes first
    edges = [(0, i) for i in range(1, 9)] + [(3, 5), (2, 6)]
    assert find_triangle_udg(build_undirected(9, edges)) == Triangle((0, 2, 6))


def test_high_degree_probes_only_first_seven():
    # the only edge among neighbors involves the eighth neighbor
    edges = [(0, i) for i in range(1, 9)] + [(1, 8)]
    G = build_undirected(9, edges)
    out = find_triangle_udg(G)
    assert isinstance(out, NotInDomain)
    assert out.witness == (0, 1, 2, 3, 4, 5, 6, 7)


def test_triangle_matches_oracle_500_seed42():
    G = unit_disk_graph(random_sites(500, 10.0, (1, 1), 42))
    out = find_triangle_udg(G)
    assert out.tag == brute_triangle(G).tag
    assert check_triangle_outcome(G, out) == []


def test_girth_examples():
    out = girth_udg(cycle_graph(5))
    assert out.length == 5 and len(out.cycle) == 5
    assert check_girth_outcome(cycle_graph(5), out) == []
    p = girth_udg(petersen())
    assert isinstance(p, NotInDomain) and p.reason is Reason.NON_PLANAR_TRIANGLE_FREE
    assert p.detail.startswith("lr-conflict")
    assert girth_udg(path_graph(4)) == NoCycle()
    assert girth_udg(complete_graph(4)).length == 3


def test_girth_high_degree_propagates():
    out = girth_udg(star(7))
    assert isinstance(out, NotInDomain) and out.reason is Reason.HIGH_DEGREE_NO_TRIANGLE


def test_girth_matches_oracle_300_seed5():
    G = unit_disk_graph(random_sites(300, 12.0, (1, 1), 5))
    out = girth_udg(G)
    assert out == Girth(out.length, out.cycle)
    assert out.length == brute_girth(G).length
    assert check_girth_outcome(G, out) == []


@pytest.mark.parametrize(
    "G, g", [(cycle_graph(4), 4), (grid_graph(3, 3), 4), (cycle_graph(7), 7), (path_graph(6), None)]
)
def test_planar_girth_examples(G, g):
    out = planar_girth(G)
    if g is None:
        assert out == NoCycle()
    else:
        assert out.length == g
        assert check_cycle(G, out.cycle) == []


def _random_planar(rng, n):
    pts = rng.random((n, 2))
    edges = set()
    if n >= 3:
        for s in Delaunay(pts).simplices:
            for a in range(3):
                u, v = sorted((int(s[a]), int(s[(a + 1) % 3])))
                edges.add((u, v))
    edges = sorted(edges)
    keep = rng.random(len(edges)) < rng.uniform(0.25, 1.0)
    return build_undirected(n, [e for e, k in zip(edges, keep) if k])


def test_planar_girth_matches_oracle_500_random_planar():
    rng = np.random.default_rng(99)
    lengths = set()
    for i in range(500):
        n = int(rng.integers(3, 201))
        if i % 20 == 1:
            G = cycle_graph(n)
        elif i % 4 == 3:
            r = int(rng.integers(2, 12))
            c = max(2, n // r)
            base = grid_graph(r, c)
            keep = rng.random(base.m) < rng.uniform(0.6, 1.0)
            G = build_undirected(base.n, [e for e, k in zip(base.edges(), keep) if k])
        else:
            G = _random_planar(rng, n)
        out = planar_girth(G)
        ref = brute_girth(G)
        assert out.tag == ref.tag
        if isinstance(out, Girth):
            assert out.length == ref.length
            assert check_cycle(G, out.cycle) == []
            lengths.add(out.length)
    assert {3, 4}.issubset(lengths) and max(lengths) > 5


def test_scan_counts_high_degree_branch():
    n = 40
    G = star(n - 1)
    st = ScanStats()
    find_triangle_udg(G, st)
    assert st.pair_tests == 21
    assert st.scanned <= 21 * n


def test_scan_counts_low_degree_branch():
    G = unit_disk_graph(random_sites(400, 60.0, (1, 1), 4))
    assert int(G.degree.max()) <= 5
    st = ScanStats()
    find_triangle_udg(G, st)
    assert st.extra["branch"] == "low-degree"
    assert st.pair_tests <= 10 * G.n


@settings(max_examples=300, deadline=None)
@given(undirected_graphs(max_n=11))
def test_robust_triangle_never_wrong(G):
    out = find_triangle_udg(G)
    assert check_triangle_outcome(G, out) == []
    if isinstance(out, TriangleFree):
        assert brute_triangle(G) == TriangleFree()


@settings(max_examples=300, deadline=None)
@given(undirected_graphs(max_n=11))
def test_robust_girth_never_wrong(G):
    out = girth_udg(G)
    assert check_girth_outcome(G, out) == []
    ref = brute_girth(G)
    if isinstance(out, NotInDomain):
        return
    assert out.tag == ref.tag
    if isinstance(out, Girth):
        assert out.length == ref.length
