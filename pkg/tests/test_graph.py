import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs, random_arcs, undirected_graphs
from robustgraphs.geometry import complete_graph, star
from robustgraphs.graph import (
    DuplicateEdge,
    EdgeListFormatError,
    ScanStats,
    SelfLoop,
    SortedAdjacency,
    VertexOutOfRange,
    adjacency_test,
    bidirected_table,
    bucket_transpose,
    build_directed,
    build_undirected,
    counting_sort_transpose,
    format_edge_list,
    parse_edge_list,
    radix_order,
)


def test_build_k3():
    G = build_undirected(3, [(0, 1), (1, 2), (2, 0)])
    assert G.degree.tolist() == [2, 2, 2]
    assert G.adjacency == [[1, 2], [0, 2], [0, 1]]
    assert G.m == 3


def test_build_edgeless():
    G = build_undirected(2, [])
    assert G.degree.tolist() == [0, 0]
    assert G.m == 0


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (2, [(0, 0)], SelfLoop),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(0, 1), (0, 1)], DuplicateEdge),
        (2, [(0, 2)], VertexOutOfRange),
        (2, [(-1, 1)], VertexOutOfRange),
    ],
)
def test_build_undirected_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_undirected(n, edges)


def test_self_loop_names_vertex():
    with pytest.raises(SelfLoop) as info:
        build_undirected(2, [(0, 0)])
    assert info.value.u == 0


@pytest.mark.parametrize(
    "edges, exc",
    [([(1, 1)], SelfLoop), ([(0, 1), (0, 1)], DuplicateEdge), ([(0, 5)], VertexOutOfRange)],
)
def test_build_directed_rejects(edges, exc):
    with pytest.raises(exc):
        build_directed(3, edges)


def test_directed_allows_both_orientations():
    D = build_directed(2, [(0, 1), (1, 0)])
    assert D.m == 2


def test_adjacency_test_examples():
    assert adjacency_test(complete_graph(3), 0, 2)
    assert not adjacency_test(build_undirected(2, []), 0, 1)
    assert not adjacency_test(star(7), 1, 2)


def test_adjacency_test_scans_shorter_list():
    G = star(7)
    st = ScanStats()
    # leaf 1 has one neighbor, the center seven: only one entry is read
    assert adjacency_test(G, 0, 1, st)
    assert st.scanned == 1
    st = ScanStats()
    assert not adjacency_test(G, 1, 0 + 2, st)
    assert st.scanned == 1


def test_adjacency_test_range():
    with pytest.raises(VertexOutOfRange):
        adjacency_test(star(2), 0, 9)
    with pytest.raises(SelfLoop):
        adjacency_test(star(2), 1, 1)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 2**40 - 1), max_size=300))
def test_radix_order_is_stable_sort(keys):
    a = np.array(keys, dtype=np.int64)
    order = radix_order(a, 2**40)
    assert order.tolist() == np.argsort(a, kind="stable").tolist()


def test_radix_order_single_pass_bound():
    a = np.array([3, 1, 3, 0, 1], dtype=np.int64)
    assert radix_order(a, 4).tolist() == [3, 1, 4, 0, 2]


def test_transpose_examples():
    S = counting_sort_transpose(build_directed(3, [(0, 2), (2, 1), (0, 1)]))
    assert S.backward == [[], [0, 2], [0]]
    assert S.forward == [[1, 2], [], [1]]
    S = counting_sort_transpose(build_directed(4, []))
    assert S.forward == S.backward == [[], [], [], []]
    S = counting_sort_transpose(build_directed(2, [(0, 1), (1, 0)]))
    assert S.forward == [[1], [0]] and S.backward == [[1], [0]]


def test_bidirected_examples():
    B = bidirected_table(counting_sort_transpose(build_directed(3, [(0, 1), (1, 0), (1, 2)])))
    assert B.bi == [[1], [0], []]
    B = bidirected_table(counting_sort_transpose(build_directed(3, [(0, 1), (1, 2), (2, 0)])))
    assert B.bi == [[], [], []]
    arcs = [(a, b) for a in range(3) for b in range(3) if a != b]
    B = bidirected_table(counting_sort_transpose(build_directed(3, arcs)))
    assert B.bi == [[1, 2], [0, 2], [0, 1]]
    assert B.count == [2, 2, 2]


def _strictly_increasing(lists):
    return all(all(a < b for a, b in zip(l, l[1:])) for l in lists)


def test_transpose_round_trip_1000_random():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(0, 200)
        p = rng.choice([0.0, 0.005, 0.02, 0.1])
        arcs = random_arcs(rng, n, p) if n <= 60 else [
            (a, b) for a, b in {(rng.randrange(n), rng.randrange(n)) for _ in range(int(p * n * n))} if a != b
        ]
        rng.shuffle(arcs)
        D = build_directed(n, arcs)
        S = counting_sort_transpose(D)
        assert _strictly_increasing(S.forward) and _strictly_increasing(S.backward)
        # transpose twice reproduces the original arc multiset
        again = bucket_transpose(bucket_transpose(D.out_adjacency))
        assert sorted(D.edges()) == sorted((v, u) for v, l in enumerate(again) for u in l)
        assert sorted(D.edges()) == sorted((v, u) for v, l in enumerate(S.forward) for u in l)
        assert sum(map(len, S.forward)) + sum(map(len, S.backward)) == 2 * D.m


@given(digraphs())
def test_transpose_membership(D):
    S = counting_sort_transpose(D)
    for v in range(D.n):
        for u in S.forward[v]:
            assert v in S.backward[u]
        for u in S.backward[v]:
            assert v in S.forward[u]


def test_bidirected_matches_naive_oracle():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(0, 100)
        D = build_directed(n, random_arcs(rng, n, rng.choice([0.01, 0.05, 0.2, 0.6])))
        B = bidirected_table(counting_sort_transpose(D))
        arcs = set(D.edges())
        naive = [sorted(u for u in range(n) if (v, u) in arcs and (u, v) in arcs) for v in range(n)]
        assert B.bi == naive
        assert _strictly_increasing(B.bi)
        for v in range(n):
            for u in B.bi[v]:
                assert v in B.bi[u]


@given(undirected_graphs())
def test_undirected_invariants(G):
    adj = G.adjacency
    assert int(G.degree.sum()) == 2 * G.m
    for v, nb in enumerate(adj):
        assert v not in nb
        assert len(nb) == len(set(nb)) == G.degree[v]
        for u in nb:
            assert v in adj[u]


# edge-list text format


def test_edge_list_round_trip():
    G = complete_graph(4)
    H = parse_edge_list(format_edge_list(G))
    assert H.adjacency == G.adjacency
    D = build_directed(3, [(0, 1), (1, 0), (2, 1)])
    E = parse_edge_list(format_edge_list(D))
    assert sorted(E.edges()) == sorted(D.edges())


@settings(max_examples=50)
@given(digraphs(max_n=8))
def test_edge_list_round_trip_directed(D):
    assert sorted(parse_edge_list(format_edge_list(D)).edges()) == sorted(D.edges())


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("2 1 u\n0 0\n", SelfLoop, 2),
        ("3 2 u\n0 1\n1 0\n", DuplicateEdge, 3),
        ("3 2 d\n0 1\n0 1\n", DuplicateEdge, 3),
        ("2 1 u\n0 7\n", VertexOutOfRange, 2),
        ("2 1 x\n0 1\n", EdgeListFormatError, 1),
        ("2 2 u\n0 1\n", EdgeListFormatError, 2),
        ("2 1 u\n0 a\n", EdgeListFormatError, 2),
        ("", EdgeListFormatError, 1),
    ],
)
def test_edge_list_errors_carry_line(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_directed_reverse_pair_is_not_duplicate_in_file():
    D = parse_edge_list("2 2 d\n0 1\n1 0\n")
    assert D.m == 2


def test_csr_neighbors_are_views():
    G = complete_graph(5)
    assert isinstance(G.neighbors(0), np.ndarray)
    assert G.neighbors(0).tolist() == [1, 2, 3, 4]
