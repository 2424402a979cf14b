"""Three-way results: an answer, an answer-free verdict, or NotInDomain."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Reason(str, Enum):
    HIGH_DEGREE_NO_TRIANGLE = "HighDegreeNoTriangle"
    NON_PLANAR_TRIANGLE_FREE = "NonPlanarTriangleFree"
    UNI_SUBGRAPH_CYCLIC = "UniSubgraphCyclic"
    HIGH_BI_DEGREE_NO_TRIANGLE = "HighBiDegreeNoTriangle"


@dataclass(frozen=True)
class Triangle:
    """Undirected: sorted ids. Directed: (v, u, w) with arcs v->u->w->v."""

    vertices: tuple[int, int, int]
    tag = "Triangle"


@dataclass(frozen=True)
class TriangleFree:
    tag = "TriangleFree"


@dataclass(frozen=True)
class Girth:
    length: int
    cycle: tuple[int, ...] = ()
    tag = "Girth"


@dataclass(frozen=True)
class NoCycle:
    tag = "NoCycle"


@dataclass(frozen=True)
class NotInDomain:
    """The input is provably outside the domain.

    ``witness`` is a vertex list whose meaning depends on ``reason``:
    HighDegreeNoTriangle / HighBiDegreeNoTriangle list the probed vertex
    followed by its chosen neighbors; UniSubgraphCyclic lists a directed cycle;
    NonPlanarTriangleFree carries the endpoints of the failing edge (if any)
    and the planarity failure indication in ``detail``.
    """

    reason: Reason
    witness: tuple[int, ...] = ()
    detail: str | None = None
    tag = "NotInDomain"


TriangleOutcome = Triangle | TriangleFree | NotInDomain
GirthOutcome = Girth | NoCycle | NotInDomain
