import pytest
from hypothesis import given

import oracles
from prismatic import (CliqueCover, build_graph, clique_cover, cover_from_triangles, disjoint_union,
                       min_clique_cover_oracle)
from prismatic.covering import HITTING_SET_BRANCH, SCHLAFLI_BRANCH
from prismatic.recognition import Pattern, pattern_graph
from prismatic.errors import (NotCobridgeFree, NotCoverable, NotDiamondK4Free, NotPrismatic, OverlappingTriangles,
                              ScaleLimitExceeded)
from prismatic.families import (BUILTIN_SPECS, line_k33, line_k33_colored, prism, schlafli_complement, triangle_chain,
                                worn_chain_compose)
from prismatic.families.special import core_ring_of_five, cycle_graph, diamond
from strategies import diamond_k4_free_graphs, prismatic_graphs


def cobridge():
    return disjoint_union(cycle_graph(4), build_graph(2, []))


def test_cover_from_triangles_examples():
    g = prism()
    assert cover_from_triangles(g, g.triangles()).size == 2
    assert cover_from_triangles(g, []).size == 3
    assert cover_from_triangles(cycle_graph(5), []).size == 3
    two = disjoint_union(prism(), prism())
    assert cover_from_triangles(two, []).size == 6
    assert cover_from_triangles(two, two.triangles()).size == 4


def test_cover_from_triangles_errors():
    g = line_k33()
    a, b = g.triangles()[:2]
    assert set(a) & set(b)
    with pytest.raises(OverlappingTriangles):
        cover_from_triangles(g, [a, b])
    with pytest.raises(ValueError):
        cover_from_triangles(prism(), [(0, 1, 2)])


@pytest.mark.parametrize("make,size", [
    (prism, 2),
    (lambda: cycle_graph(5), 3),
    (line_k33, 3),
    (lambda: worn_chain_compose([line_k33_colored("columns"), line_k33_colored("rows")]).graph, 6),
    (core_ring_of_five, None),
])
def test_pinned_cover_sizes(make, size):
    g = make()
    res = clique_cover(g)
    expected = min_clique_cover_size_cached(g)
    assert res.cover.size == expected and res.cover.is_valid(g)
    if size is not None:
        assert expected == size


def min_clique_cover_size_cached(g, _memo={}):
    key = (g.n, tuple(g.adj))
    if key not in _memo:
        _memo[key] = oracles.min_clique_cover_size(g)
    return _memo[key]


def test_branch_follows_hitting_number():
    assert clique_cover(line_k33()).report.branch == HITTING_SET_BRANCH
    pair = worn_chain_compose([line_k33_colored("columns"), line_k33_colored("rows")]).graph
    assert clique_cover(pair).report.branch == SCHLAFLI_BRANCH


def test_schlafli_cover():
    g = schlafli_complement()
    res = clique_cover(g)
    assert res.report.branch == SCHLAFLI_BRANCH
    assert res.report.hitting_set is None
    assert res.cover.size == 9 and res.cover.t == 9
    assert res.cover.is_valid(g)


def test_ladder_matches_oracle():
    g, _ = triangle_chain(BUILTIN_SPECS["ladder"])
    res = clique_cover(g, verify=True)
    assert res.cover.size == min_clique_cover_oracle(g).size == oracles.min_clique_cover_size(g)


def test_verify_rejects():
    with pytest.raises(NotDiamondK4Free):
        clique_cover(diamond())
    lonely = build_graph(4, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(NotPrismatic):
        clique_cover(lonely, verify=True)
    with pytest.raises(NotCobridgeFree):
        clique_cover(cobridge(), verify=True)


def test_not_coverable():
    # ten disjoint triangles: Lambda = 10 and 30 vertices, more than the Schlafli complement has
    g = disjoint_union(*[build_graph(3, [(0, 1), (1, 2), (0, 2)])] * 10)
    with pytest.raises(NotCoverable):
        clique_cover(g)


def test_oracle_cap():
    with pytest.raises(ScaleLimitExceeded):
        min_clique_cover_oracle(build_graph(31, []))


def test_cover_validation():
    g = prism()
    assert CliqueCover(((0, 2, 4), (1, 3, 5))).is_valid(g)
    assert not CliqueCover(((0, 2, 4),)).is_valid(g)
    assert not CliqueCover(((0, 1, 2), (3, 4, 5))).is_valid(g)


def test_deterministic():
    g, _ = triangle_chain(BUILTIN_SPECS["cycle8"])
    a, b = clique_cover(g), clique_cover(g)
    assert a.cover == b.cover and a.report.hitting_set == b.report.hitting_set


@given(diamond_k4_free_graphs(max_n=10))
def test_oracle_matches_clique_partition(g):
    cover = min_clique_cover_oracle(g)
    assert cover.is_valid(g)
    assert cover.size == oracles.min_clique_cover_size(g)


@given(diamond_k4_free_graphs(max_n=9))
def test_oracle_matches_triangle_set_scan(g):
    assert min_clique_cover_oracle(g).size == oracles.cover_size_via_triangle_sets(g)


@given(prismatic_graphs())
def test_cover_matches_oracle_on_generators(g):
    try:
        res = clique_cover(g)
    except NotCoverable:
        # only inputs outside the co-bridge-free class may fail both branches
        assert oracles.has_induced(g, pattern_graph(Pattern.C4_2K1))
        return
    assert res.cover.is_valid(g)
    assert res.cover.size == min_clique_cover_oracle(g).size
    if g.n <= 14:
        assert res.cover.size == oracles.min_clique_cover_size(g)
    assert res.cover.size == g.n - 2 * res.cover.t - res.cover.m
