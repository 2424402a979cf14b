import itertools

import pytest

from robustgraphs.geometry import complete_graph, cycle_graph, dicycle, path_graph, petersen
from robustgraphs.graph import build_directed, build_undirected
from robustgraphs.oracle import (
    OracleCapExceeded,
    brute_directed_triangle,
    brute_girth,
    brute_triangle,
    exhaustive_girth,
)
from robustgraphs.outcomes import Girth, NoCycle, Triangle, TriangleFree


def test_brute_triangle_examples():
    assert brute_triangle(complete_graph(3)) == Triangle((0, 1, 2))
    assert brute_triangle(cycle_graph(6)) == TriangleFree()
    assert brute_triangle(complete_graph(4)) == Triangle((0, 1, 2))


def test_brute_girth_examples():
    assert brute_girth(path_graph(5)) == NoCycle()
    assert brute_girth(cycle_graph(5)) == Girth(5)
    assert brute_girth(petersen()) == Girth(5)


def test_petersen_exhaustive():
    assert exhaustive_girth(10, petersen().edges()) == 5


def test_brute_directed_examples():
    assert brute_directed_triangle(dicycle(3)) == Triangle((0, 1, 2))
    assert brute_directed_triangle(dicycle(4)) == TriangleFree()
    assert brute_directed_triangle(build_directed(2, [(0, 1), (1, 0)])) == TriangleFree()


def test_exhaustive_hand_cases():
    assert exhaustive_girth(4, [(0, 1), (1, 2), (2, 3), (3, 0)]) == 4
    assert exhaustive_girth(4, [(0, 1), (1, 2), (2, 3)]) is None
    # two cycles sharing a vertex: 3 and 5
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6), (6, 0)]
    assert exhaustive_girth(7, edges) == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_brute_girth_equals_exhaustive_all_small(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        ref = exhaustive_girth(n, edges)
        got = brute_girth(build_undirected(n, edges))
        assert (got == NoCycle()) if ref is None else (got == Girth(ref))


def test_cap():
    with pytest.raises(OracleCapExceeded):
        brute_triangle(build_undirected(5001, []))
