"""Left-right planarity decision in O(n + m).

Follows the left-right criterion formulation (DFS orientation with lowpoints
and nesting depths, then a second DFS maintaining a stack of conflict pairs).
Only the decision is produced; no embedding and no Kuratowski subgraph.

Both DFS passes are iterative so deep graphs do not hit the recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import UndirectedGraph


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    # "edge-bound" when rejected by counting, "lr-conflict" when the DFS test fails
    failure: str | None = None
    detail: str | None = None
    edge: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.planar


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LRTest:
    def __init__(self, adj: list[list[int]]):
        self.adj = adj
        n = len(adj)
        self.height = [-1] * n
        self.parent_edge: list[tuple[int, int] | None] = [None] * n
        self.lowpt: dict = {}
        self.lowpt2: dict = {}
        self.nesting: dict = {}
        self.ordered: list[list[int]] = [[] for _ in range(n)]
        self.roots: list[int] = []
        self.ref: dict = {}
        self.lowpt_edge: dict = {}
        self.stack_bottom: dict = {}
        self.S: list[_ConflictPair] = []
        self.failed_edge = None

    # -- phase 1: orientation -------------------------------------------------

    def orient(self) -> None:
        adj, height, parent_edge = self.adj, self.height, self.parent_edge
        lowpt, lowpt2, nesting = self.lowpt, self.lowpt2, self.nesting
        n = len(adj)
        out: list[list[int]] = [[] for _ in range(n)]
        oriented: set[tuple[int, int]] = set()
        ind = [0] * n
        pending = [False] * n
        for root in range(n):
            if height[root] >= 0:
                continue
            height[root] = 0
            self.roots.append(root)
            stack = [root]
            while stack:
                v = stack[-1]
                e = parent_edge[v]
                a = adj[v]
                descended = False
                while ind[v] < len(a):
                    w = a[ind[v]]
                    vw = (v, w)
                    if not pending[v]:
                        key = (v, w) if v < w else (w, v)
                        if key in oriented:
                            ind[v] += 1
                            continue
                        oriented.add(key)
                        out[v].append(w)
                        lowpt[vw] = lowpt2[vw] = height[v]
                        if height[w] < 0:
                            parent_edge[w] = vw
                            height[w] = height[v] + 1
                            pending[v] = True
                            stack.append(w)
                            descended = True
                            break
                        lowpt[vw] = height[w]
                    pending[v] = False
                    nd = 2 * lowpt[vw]
                    if lowpt2[vw] < height[v]:
                        nd += 1  # chordal
                    nesting[vw] = nd
                    if e is not None:
                        if lowpt[vw] < lowpt[e]:
                            lowpt2[e] = min(lowpt[e], lowpt2[vw])
                            lowpt[e] = lowpt[vw]
                        elif lowpt[vw] > lowpt[e]:
                            lowpt2[e] = min(lowpt2[e], lowpt[vw])
                        else:
                            lowpt2[e] = min(lowpt2[e], lowpt2[vw])
                    ind[v] += 1
                if not descended:
                    stack.pop()
        for v in range(n):
            self.ordered[v] = sorted(out[v], key=lambda w, v=v: nesting[(v, w)])

    # -- phase 2: testing -----------------------------------------------------

    def _conflicting(self, iv: _Interval, b) -> bool:
        return not iv.empty() and self.lowpt[iv.high] > self.lowpt[b]

    def _lowest(self, P: _ConflictPair) -> int:
        if P.left.empty():
            return self.lowpt[P.right.low]
        if P.right.empty():
            return self.lowpt[P.left.low]
        return min(self.lowpt[P.left.low], self.lowpt[P.right.low])

    def _top(self):
        return self.S[-1] if self.S else None

    def _add_constraints(self, ei, e) -> bool:
        S, ref, lowpt = self.S, self.ref, self.lowpt
        P = _ConflictPair()
        # merge return edges of ei into P.right
        while True:
            Q = S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if lowpt[Q.right.low] > lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                ref[Q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.left
        while S and (
            self._conflicting(S[-1].left, ei) or self._conflicting(S[-1].right, ei)
        ):
            Q = S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            S.append(P)
        return True

    def _remove_back_edges(self, e) -> None:
        S, ref, lowpt = self.S, self.ref, self.lowpt
        u = e[0]
        while S and self._lowest(S[-1]) == self.height[u]:
            S.pop()
        if S:
            P = S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = ref.get(P.left.high)
            if P.left.high is None and P.left.low is not None:
                ref[P.left.low] = P.right.low
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = ref.get(P.right.high)
            if P.right.high is None and P.right.low is not None:
                ref[P.right.low] = P.left.low
                P.right.low = None
            S.append(P)
        if lowpt[e] < self.height[u]:
            hl = S[-1].left.high
            hr = S[-1].right.high
            if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    def test(self) -> bool:
        ordered, height, parent_edge = self.ordered, self.height, self.parent_edge
        lowpt, lowpt_edge, stack_bottom = self.lowpt, self.lowpt_edge, self.stack_bottom
        n = len(ordered)
        ind = [0] * n
        pending = [False] * n
        for root in self.roots:
            stack = [root]
            while stack:
                v = stack[-1]
                e = parent_edge[v]
                oa = ordered[v]
                descended = False
                while ind[v] < len(oa):
                    w = oa[ind[v]]
                    ei = (v, w)
                    if not pending[v]:
                        stack_bottom[ei] = self._top()
                        if ei == parent_edge[w]:
                            pending[v] = True
                            stack.append(w)
                            descended = True
                            break
                        lowpt_edge[ei] = ei
                        self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                    pending[v] = False
                    if lowpt[ei] < height[v]:
                        if ind[v] == 0:
                            lowpt_edge[e] = lowpt_edge[ei]
                        elif not self._add_constraints(ei, e):
                            self.failed_edge = ei
                            return False
                    ind[v] += 1
                if descended:
                    continue
                if e is not None:
                    self._remove_back_edges(e)
                stack.pop()
        return True


def planarity_test(G: UndirectedGraph, triangle_free: bool = False) -> PlanarityResult:
    """Decide planarity; ``triangle_free`` enables the sharper edge bound 2n - 4."""
    n, m = G.n, G.m
    if n >= 3 and m > 3 * n - 6:
        return PlanarityResult(False, "edge-bound", f"m={m} > 3n-6={3 * n - 6}")
    if triangle_free and n >= 3 and m > 2 * n - 4:
        return PlanarityResult(False, "edge-bound", f"m={m} > 2n-4={2 * n - 4}")
    lr = _LRTest(G.adjacency)
    lr.orient()
    if lr.test():
        return PlanarityResult(True)
    return PlanarityResult(
        False, "lr-conflict", f"conflict at edge {lr.failed_edge}", lr.failed_edge
    )


def planarity(G: UndirectedGraph, triangle_free: bool = False) -> bool:
    return planarity_test(G, triangle_free).planar
