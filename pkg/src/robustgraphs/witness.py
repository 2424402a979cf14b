"""Re-check outcome certificates against the input graph.

Each ``check_*`` returns a list of problems; an empty list means the witness
holds up. Checks use neighbor sets only.
"""

from __future__ import annotations

from .graph import DirectedGraph, UndirectedGraph
from .oracle import brute_triangle
from .outcomes import Girth, NoCycle, NotInDomain, Reason, Triangle, TriangleFree


def check_triangle_outcome(G: UndirectedGraph, out) -> list[str]:
    nbr = G.neighbor_sets
    if isinstance(out, Triangle):
        a, b, c = out.vertices
        if len({a, b, c}) != 3:
            return [f"triangle {out.vertices} repeats a vertex"]
        return [f"missing edge {x}-{y}" for x, y in ((a, b), (b, c), (a, c)) if y not in nbr[x]]
    if isinstance(out, TriangleFree):
        return []
    if isinstance(out, NotInDomain):
        if out.reason is not Reason.HIGH_DEGREE_NO_TRIANGLE:
            return [f"unexpected reason {out.reason}"]
        v, *chosen = out.witness
        errs = []
        if len(set(chosen)) < 6 or len(set(chosen)) != len(chosen):
            errs.append("fewer than six distinct neighbors listed")
        errs += [f"{u} is not a neighbor of {v}" for u in chosen if u not in nbr[v]]
        errs += [
            f"listed neighbors {a} and {b} are adjacent"
            for i, a in enumerate(chosen)
            for b in chosen[i + 1 :]
            if b in nbr[a]
        ]
        return errs
    return [f"not a triangle outcome: {out!r}"]


def check_cycle(G: UndirectedGraph, cycle) -> list[str]:
    nbr = G.neighbor_sets
    k = len(cycle)
    if k < 3:
        return ["cycle shorter than 3"]
    if len(set(cycle)) != k:
        return ["cycle repeats a vertex"]
    return [
        f"missing edge {cycle[i]}-{cycle[(i + 1) % k]}"
        for i in range(k)
        if cycle[(i + 1) % k] not in nbr[cycle[i]]
    ]


def check_girth_outcome(G: UndirectedGraph, out) -> list[str]:
    if isinstance(out, Girth):
        errs = check_cycle(G, out.cycle)
        if len(out.cycle) != out.length:
            errs.append(f"witness length {len(out.cycle)} != girth {out.length}")
        return errs
    if isinstance(out, NoCycle):
        return []
    if isinstance(out, NotInDomain):
        if out.reason is Reason.HIGH_DEGREE_NO_TRIANGLE:
            return check_triangle_outcome(G, out)
        if out.reason is Reason.NON_PLANAR_TRIANGLE_FREE:
            errs = []
            if not out.detail:
                errs.append("no planarity failure indication")
            if not isinstance(brute_triangle(G), TriangleFree):
                errs.append("graph has a triangle")
            return errs
        return [f"unexpected reason {out.reason}"]
    return [f"not a girth outcome: {out!r}"]


def check_directed_outcome(D: DirectedGraph, out) -> list[str]:
    succ = D.successor_sets
    if isinstance(out, Triangle):
        v, u, w = out.vertices
        if len({v, u, w}) != 3:
            return [f"triangle {out.vertices} repeats a vertex"]
        return [f"missing arc {x}->{y}" for x, y in ((v, u), (u, w), (w, v)) if y not in succ[x]]
    if isinstance(out, TriangleFree):
        return []
    if not isinstance(out, NotInDomain):
        return [f"not a directed triangle outcome: {out!r}"]
    if out.reason is Reason.UNI_SUBGRAPH_CYCLIC:
        cyc = out.witness
        k = len(cyc)
        errs = []
        if k < 2 or len(set(cyc)) != k:
            errs.append("witness is not a simple cycle")
        for i in range(k):
            x, y = cyc[i], cyc[(i + 1) % k]
            if y not in succ[x]:
                errs.append(f"missing arc {x}->{y}")
            elif x in succ[y]:
                errs.append(f"arc {x}->{y} is bidirected")
        return errs
    if out.reason is Reason.HIGH_BI_DEGREE_NO_TRIANGLE:
        v, *chosen = out.witness
        errs = []
        if len(set(chosen)) != 7 or len(chosen) != 7:
            errs.append("witness must list 7 distinct bidirected neighbors")
        errs += [
            f"{u} is not a bidirected neighbor of {v}"
            for u in chosen
            if u not in succ[v] or v not in succ[u]
        ]
        errs += [f"arc {a}->{b} closes a triangle" for a in chosen for b in chosen if a != b and b in succ[a]]
        return errs
    return [f"unexpected reason {out.reason}"]
