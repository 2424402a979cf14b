import random

import networkx as nx
import numpy as np
import pytest
from scipy.spatial import Delaunay

from conftest import random_undirected_edges
from robustgraphs.geometry import (
    complete_bipartite,
    complete_graph,
    grid_graph,
    path_graph,
    petersen,
)
from robustgraphs.graph import build_undirected
from robustgraphs.planarity import planarity, planarity_test


def nx_planar(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return nx.check_planarity(H)[0]


def test_small_cases():
    assert planarity(complete_graph(4))
    assert not planarity(complete_graph(5))
    assert not planarity(complete_bipartite(3, 3))
    assert not planarity(petersen())
    assert planarity(grid_graph(3, 3))
    assert planarity(build_undirected(0, []))


def test_edge_bound_shortcuts():
    r = planarity_test(complete_graph(6))
    assert r.failure == "edge-bound"
    # K_{3,3} has 9 = 2n - 3 edges: caught by the triangle-free bound only
    assert planarity_test(complete_bipartite(3, 3)).failure == "lr-conflict"
    assert planarity_test(complete_bipartite(3, 3), triangle_free=True).failure == "edge-bound"


def test_deep_path_no_recursion_limit():
    assert planarity(path_graph(20000))


def test_agrees_with_networkx_random():
    rng = random.Random(5)
    for _ in range(2000):
        n = rng.randint(1, 15)
        G = build_undirected(n, random_undirected_edges(rng, n, rng.random() * 0.6))
        assert planarity(G) == nx_planar(G)


def test_agrees_with_networkx_triangulations():
    rng = np.random.default_rng(8)
    seen = {True: 0, False: 0}
    for t in range(150):
        n = int(rng.integers(5, 300))
        tri = Delaunay(rng.random((n, 2)))
        edges = set()
        for s in tri.simplices:
            for a in range(3):
                u, v = sorted((int(s[a]), int(s[(a + 1) % 3])))
                edges.add((u, v))
        edges = sorted(edges)
        if t % 2:
            keep = rng.random(len(edges)) < rng.uniform(0.4, 1.0)
            edges = [e for e, k in zip(edges, keep) if k]
        if t % 3 == 0:
            u, v = sorted(int(x) for x in rng.choice(n, 2, replace=False))
            if (u, v) not in edges:
                edges.append((u, v))
        G = build_undirected(n, edges)
        ours = planarity(G)
        assert ours == nx_planar(G)
        seen[ours] += 1
    assert seen[True] and seen[False]


@pytest.mark.parametrize("k", [5, 6, 7])
def test_subdivided_kuratowski(k):
    # subdivide every edge of K5 / K3,3: still non-planar, now sparse
    base = complete_graph(5) if k != 6 else complete_bipartite(3, 3)
    edges = []
    nxt = base.n
    for u, v in base.edges():
        for _ in range(k - 4):
            edges.append((u, nxt))
            u = nxt
            nxt += 1
        edges.append((u, v))
    assert not planarity(build_undirected(nxt, edges))
