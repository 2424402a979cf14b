"""Robust triangle finding and girth for the unit-disk-graph domain.

Two facts about unit disk graphs drive everything here: among any six
neighbors of a vertex some pair is adjacent, and a triangle-free unit disk
graph is planar. So a vertex of degree > 5 either yields a triangle after a
constant number of adjacency tests or certifies that the input is not a unit
disk graph, and the triangle-free case reduces to planar girth.

``planar_girth`` is exact but not the linear-time planar algorithm: it runs a
depth-pruned BFS from every vertex, O(n * m) in the worst case.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .graph import ScanStats, UndirectedGraph, adjacency_test
from .outcomes import (
    Girth,
    GirthOutcome,
    NoCycle,
    NotInDomain,
    Reason,
    Triangle,
    TriangleFree,
    TriangleOutcome,
)
from .planarity import planarity_test

# Degree above which a unit disk graph must contain a triangle at the vertex.
DEGREE_BOUND = 5
# Neighbors probed in the high-degree branch.
PROBE = 7


def find_triangle_udg(G: UndirectedGraph, stats: ScanStats | None = None) -> TriangleOutcome:
    """Return a Triangle, TriangleFree, or NotInDomain(HighDegreeNoTriangle).

    Only the smallest-id vertex of degree > 5 is probed when one exists, so
    the query touches O(n) memory even if the graph has Theta(n^2) edges.
    """
    if stats is None:
        stats = ScanStats()
    high = np.flatnonzero(G.degree > DEGREE_BOUND)
    if high.size:
        v = int(high[0])
        stats.extra["branch"] = "high-degree"
        chosen = G.neighbors(v)[:PROBE].tolist()
        for i, a in enumerate(chosen):
            for b in chosen[i + 1 :]:
                if adjacency_test(G, a, b, stats):
                    return Triangle(tuple(sorted((v, a, b))))
        return NotInDomain(
            Reason.HIGH_DEGREE_NO_TRIANGLE,
            (v, *chosen),
            f"vertex {v} has degree {int(G.degree[v])} and {len(chosen)} pairwise non-adjacent neighbors",
        )

    stats.extra["branch"] = "low-degree"
    adj = G.adjacency
    # mark[x] == a  <=>  x was stamped while scanning N(a); stamps never go stale
    # because N(a) is fixed, so no reset between vertices is needed.
    mark = [-1] * G.n
    for v, nb in enumerate(adj):
        for i in range(len(nb) - 1):
            a = nb[i]
            na = adj[a]
            for x in na:
                mark[x] = a
            stats.scanned += len(na)
            for b in nb[i + 1 :]:
                stats.pair_tests += 1
                if mark[b] == a:
                    return Triangle(tuple(sorted((v, a, b))))
    return TriangleFree()


def girth_udg(G: UndirectedGraph, stats: ScanStats | None = None) -> GirthOutcome:
    tri = find_triangle_udg(G, stats)
    if isinstance(tri, Triangle):
        return Girth(3, tri.vertices)
    if isinstance(tri, NotInDomain):
        return tri
    res = planarity_test(G, triangle_free=True)
    if not res.planar:
        witness = res.edge if res.edge is not None else ()
        return NotInDomain(
            Reason.NON_PLANAR_TRIANGLE_FREE, witness, f"{res.failure}: {res.detail}"
        )
    return planar_girth(G)


def _bfs_parents(adj: list[list[int]], root: int) -> list[int]:
    parent = [-1] * len(adj)
    parent[root] = root
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if parent[w] == -1:
                parent[w] = u
                queue.append(w)
    return parent


def _cycle_from(adj, root: int, u: int, w: int) -> tuple[int, ...]:
    parent = _bfs_parents(adj, root)

    def up(x):
        path = [x]
        while x != root:
            x = parent[x]
            path.append(x)
        return path

    pu, pw = up(u), up(w)
    on_pu = {x: i for i, x in enumerate(pu)}
    for j, x in enumerate(pw):
        if x in on_pu:
            return tuple(pu[: on_pu[x] + 1] + pw[:j][::-1])
    raise AssertionError("BFS paths share no vertex")  # pragma: no cover


def planar_girth(G: UndirectedGraph) -> Girth | NoCycle:
    """Exact girth by BFS from every vertex with depth pruning.

    A non-tree edge (u, w) seen from root r closes a walk of length
    d(u) + d(w) + 1; the minimum over all roots is the girth. Once the best
    value is g, vertices at depth >= ceil(g / 2) cannot improve it and are
    not expanded.
    """
    adj = G.adjacency
    n = G.n
    best = n + 1
    arg = None
    dist = [-1] * n
    parent = [-1] * n
    for r in range(n):
        if len(adj[r]) < 2:
            continue
        dist[r] = 0
        touched = [r]
        queue = deque([r])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du >= best:
                break
            pu = parent[u]
            for w in adj[u]:
                dw = dist[w]
                if dw < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    touched.append(w)
                    queue.append(w)
                elif w != pu:
                    c = du + dw + 1
                    if c < best:
                        best = c
                        arg = (r, u, w)
        for x in touched:
            dist[x] = -1
            parent[x] = -1
        if best == 3:
            break
    if arg is None:
        return NoCycle()
    cycle = _cycle_from(adj, *arg)
    return Girth(len(cycle), cycle)
