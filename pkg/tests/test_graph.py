import pytest
from hypothesis import given

import oracles
from prismatic import build_graph, complement, disjoint_union, enumerate_triangles, induced_subgraph, t_matrix
from prismatic.errors import InvalidEdge, InvalidVertex, NotDiamondK4Free, NotPrismaticWitness
from prismatic.families.special import (complete_graph, cycle_graph, diamond, line_k33, lk33_index, prism,
                                        schlafli_complement)
from prismatic.graph import NO_COMMON_NEIGHBOR, NOT_ADJACENT, disjoint_triangle_matching, iter_bits, to_mask
from strategies import diamond_k4_free_graphs, graphs


def test_build_rejects_loops_and_range():
    with pytest.raises(InvalidEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(0, 3)])


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1 and g.edges() == [(0, 1)]


def test_schlafli_counts():
    g = schlafli_complement()
    assert g.n == 27 and g.m == 135
    assert all(g.degree(v) == 10 for v in range(27))
    assert len(enumerate_triangles(g)) == 45


def test_k3_t_matrix():
    tm = t_matrix(complete_graph(3))
    assert tm.entry(0, 1) == 2 and tm.entry(0, 2) == 1 and tm.entry(1, 2) == 0
    assert tm.triangles_through(0) == [(0, 1, 2)]


def test_c4_t_matrix():
    tm = t_matrix(cycle_graph(4))
    assert tm.entry(0, 1) == NO_COMMON_NEIGHBOR
    assert tm.entry(0, 2) == NOT_ADJACENT


def test_diamond_raises_with_witness():
    with pytest.raises(NotDiamondK4Free) as exc:
        t_matrix(diamond())
    v, w, x, y = exc.value.witness
    g = diamond()
    assert g.has_edge(v, w) and all(g.has_edge(v, z) and g.has_edge(w, z) for z in (x, y))


def test_k4_raises():
    with pytest.raises(NotDiamondK4Free):
        t_matrix(complete_graph(4))


def test_induced_diagonal_is_triangle():
    diag = [lk33_index(1, 1), lk33_index(2, 2), lk33_index(3, 3)]
    sub, mapping = induced_subgraph(line_k33(), diag)
    assert sub == complete_graph(3)
    assert mapping == tuple(sorted(diag))


def test_induced_rejects_bad_vertex():
    with pytest.raises(InvalidVertex):
        induced_subgraph(prism(), [0, 9])


def test_complement_c6_is_prism():
    assert complement(cycle_graph(6)) == prism()


def test_disjoint_union_offsets():
    u = disjoint_union(prism(), prism())
    assert u.n == 12 and u.m == 18 and len(u.triangles()) == 4
    assert not any(u.has_edge(a, b) for a in range(6) for b in range(6, 12))


def test_diagonal_matching():
    g = line_k33()
    t1 = tuple(sorted((lk33_index(1, 1), lk33_index(2, 2), lk33_index(3, 3))))
    t2 = tuple(sorted((lk33_index(1, 2), lk33_index(2, 3), lk33_index(3, 1))))
    pairs = disjoint_triangle_matching(g, t1, t2)
    assert sorted(s for s, _ in pairs) == list(t1)
    assert sorted(t for _, t in pairs) == list(t2)
    assert all(g.has_edge(s, t) for s, t in pairs)


def test_matching_needs_disjoint():
    g = prism()
    with pytest.raises(NotPrismaticWitness):
        disjoint_triangle_matching(g, (0, 2, 4), (0, 2, 4))


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_triangles_match_triple_loop(g):
    assert enumerate_triangles(g) == oracles.triangles(g)


@given(graphs())
def test_adjacency_symmetric_irreflexive(g):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for w in iter_bits(g.adj[v]):
            assert g.has_edge(w, v)


@given(diamond_k4_free_graphs())
def test_t_matrix_against_common_neighbours(g):
    tm = t_matrix(g)
    for v in range(g.n):
        for w in range(g.n):
            if v == w:
                continue
            common = [x for x in range(g.n) if g.has_edge(v, x) and g.has_edge(w, x)]
            if not g.has_edge(v, w):
                assert tm.entry(v, w) == NOT_ADJACENT
            elif common:
                assert tm.entry(v, w) == common[0] and len(common) == 1
            else:
                assert tm.entry(v, w) == NO_COMMON_NEIGHBOR
        assert tm.triangles_through(v) == [t for t in oracles.triangles(g) if v in t]


@given(graphs())
def test_t_matrix_raises_exactly_on_diamond_or_k4(g):
    bad = any(g.has_edge(v, w) and sum(g.has_edge(v, x) and g.has_edge(w, x) for x in range(g.n)) >= 2
              for v in range(g.n) for w in range(v + 1, g.n))
    if bad:
        with pytest.raises(NotDiamondK4Free):
            t_matrix(g)
    else:
        t_matrix(g)


@given(graphs(min_n=1))
def test_induced_subgraph_preserves_adjacency(g):
    keep = [v for v in range(g.n) if v % 2 == 0]
    sub, mapping = induced_subgraph(g, keep)
    for i in range(sub.n):
        for j in range(sub.n):
            assert sub.has_edge(i, j) == g.has_edge(mapping[i], mapping[j])
    assert to_mask(mapping) == to_mask(keep)
