"""Brute-force reference answers.

Nothing here shares traversal code with the robust algorithms; everything
goes through plain neighbor sets. Clarity over speed, so inputs are capped.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .geometry import SiteSet
from .graph import DirectedGraph, UndirectedGraph
from .outcomes import Girth, NoCycle, Triangle, TriangleFree

MAX_N = 5000


class OracleCapExceeded(ValueError):
    pass


def _cap(n: int) -> None:
    if n > MAX_N:
        raise OracleCapExceeded(f"oracle refuses n={n} > {MAX_N}")


def brute_triangle(G: UndirectedGraph) -> Triangle | TriangleFree:
    """Lexicographically smallest triangle (a < b < c), if any."""
    _cap(G.n)
    nbr = G.neighbor_sets
    for a in range(G.n):
        for b in sorted(nbr[a]):
            if b <= a:
                continue
            common = [c for c in nbr[a] & nbr[b] if c > b]
            if common:
                return Triangle((a, b, min(common)))
    return TriangleFree()


def brute_girth(G: UndirectedGraph) -> Girth | NoCycle:
    """Girth from an unpruned BFS at every root (stops early only at 3)."""
    _cap(G.n)
    nbr = G.neighbor_sets
    best = None
    for root in range(G.n):
        dist = {root: 0}
        par = {root: None}
        q = deque([root])
        while q:
            x = q.popleft()
            for y in nbr[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    par[y] = x
                    q.append(y)
                elif par[x] != y:
                    c = dist[x] + dist[y] + 1
                    if best is None or c < best:
                        best = c
        if best == 3:
            break
    return NoCycle() if best is None else Girth(best)


def exhaustive_girth(n: int, edges) -> int | None:
    """Shortest simple cycle by enumerating simple paths (n <= ~12).

    Each cycle is grown from its smallest vertex s through vertices > s and
    counted when the path can close back to s.
    """
    if n > 16:
        raise OracleCapExceeded("exhaustive enumeration is for tiny graphs")
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best = None
    for s in range(n):
        allowed = ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, 1)]
        while stack:
            v, used, length = stack.pop()
            if length >= 3 and (adj[v] >> s) & 1:
                if best is None or length < best:
                    best = length
            if best is not None and length + 1 >= best:
                continue
            cand = adj[v] & ~used & allowed
            while cand:
                low = cand & -cand
                cand ^= low
                stack.append((low.bit_length() - 1, used | low, length + 1))
    return best


def brute_directed_triangle(D: DirectedGraph) -> Triangle | TriangleFree:
    """First (v, u, w) with arcs v->u, u->w, w->v; 2-cycles do not count."""
    _cap(D.n)
    out = D.successor_sets
    for v in range(D.n):
        for u in sorted(out[v]):
            for w in sorted(out[u]):
                if w != v and v in out[w]:
                    return Triangle((v, u, w))
    return TriangleFree()


def naive_unit_disk_edges(S: SiteSet) -> set[tuple[int, int]]:
    _cap(len(S))
    d2 = (S.x[:, None] - S.x[None, :]) ** 2 + (S.y[:, None] - S.y[None, :]) ** 2
    i, j = np.nonzero(np.triu(d2 <= 4.0, k=1))
    return set(zip(i.tolist(), j.tolist()))


def naive_transmission_edges(S: SiteSet) -> set[tuple[int, int]]:
    _cap(len(S))
    d2 = (S.x[:, None] - S.x[None, :]) ** 2 + (S.y[:, None] - S.y[None, :]) ** 2
    hit = d2 <= (S.r**2)[:, None]
    np.fill_diagonal(hit, False)
    i, j = np.nonzero(hit)
    return set(zip(i.tolist(), j.tolist()))
