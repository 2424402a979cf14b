"""Robust triangle and girth algorithms for unit disk and transmission graphs.

Inputs are abstract graphs. Every answer is either correct or a checkable
verdict that the input cannot be a unit disk graph (resp. transmission graph).
"""

from .geometry import SiteSet, random_sites, transmission_graph, unit_disk_graph
from .graph import (
    DirectedGraph,
    UndirectedGraph,
    adjacency_test,
    bidirected_table,
    build_directed,
    build_undirected,
    counting_sort_transpose,
)
from .outcomes import Girth, NoCycle, NotInDomain, Reason, Triangle, TriangleFree
from .planarity import planarity
from .tg import find_directed_triangle
from .udg import find_triangle_udg, girth_udg, planar_girth

__all__ = [
    "DirectedGraph",
    "Girth",
    "NoCycle",
    "NotInDomain",
    "Reason",
    "SiteSet",
    "Triangle",
    "TriangleFree",
    "UndirectedGraph",
    "adjacency_test",
    "bidirected_table",
    "build_directed",
    "build_undirected",
    "counting_sort_transpose",
    "find_directed_triangle",
    "find_triangle_udg",
    "girth_udg",
    "planar_girth",
    "planarity",
    "random_sites",
    "transmission_graph",
    "unit_disk_graph",
]
