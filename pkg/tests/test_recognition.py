from itertools import combinations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from prismatic import build_graph, disjoint_union, find_induced, is_cobridge_free, is_prismatic
from prismatic.errors import ScaleLimitExceeded
from prismatic.families.special import (complete_graph, core_ring_of_five, cycle_graph, diamond, line_k33,
                                        lk33_index, petersen, prism, schlafli_complement)
from prismatic.recognition import (FORBIDDEN_SUBGRAPH, ODD_PARITY_CYCLE, PRISMATIC_VIOLATION, Coloring, Pattern,
                                   check_prismatic_certificate, find_bicolored_pattern, find_induced_bruteforce,
                                   induces_pattern, is_k_substantial, is_orientable, odd_cycle_is_valid,
                                   orientation_violations, pattern_graph, three_coloring)
from strategies import graphs, prismatic_instances


def cobridge():
    return disjoint_union(cycle_graph(4), build_graph(2, []))


# ------------------------------------------------------------ prismatic

def test_prismatic_examples():
    assert is_prismatic(prism())
    assert is_prismatic(schlafli_complement())
    assert is_prismatic(line_k33())
    v = is_prismatic(diamond())
    assert not v and v.certificate.kind == PRISMATIC_VIOLATION
    apex, *tri = v.certificate.vertices
    assert sum(diamond().has_edge(apex, x) for x in tri) == 2
    assert check_prismatic_certificate(diamond(), v.certificate)


@given(graphs(max_n=8))
def test_prismatic_matches_definition(g):
    v = is_prismatic(g)
    assert bool(v) == oracles.is_prismatic(g)
    if not v:
        assert check_prismatic_certificate(g, v.certificate)


@given(prismatic_instances())
def test_generators_are_prismatic_and_diamond_k4_free(inst):
    g = inst.graph
    assert is_prismatic(g)
    assert find_induced(g, Pattern.DIAMOND) is None
    assert find_induced(g, Pattern.K4) is None


# -------------------------------------------------------------- patterns

def test_pattern_examples():
    cert = find_induced(cobridge(), Pattern.C4_2K1)
    assert cert is not None and sorted(cert.vertices) == list(range(6))
    assert find_induced(prism(), Pattern.C4_2K1) is None
    assert find_induced(complete_graph(4), Pattern.DIAMOND) is None
    assert find_induced(complete_graph(4), Pattern.K4) is not None


def test_schlafli_cobridge_regression():
    # computed once by exhaustive search; the complement of the Schlafli graph is co-bridge-free
    assert find_induced(schlafli_complement(), Pattern.C4_2K1) is None


def test_cobridge_free_wrapper():
    assert not is_cobridge_free(cobridge())
    assert is_cobridge_free(prism())


@given(graphs(max_n=5))
def test_small_graphs_are_cobridge_free(g):
    assert is_cobridge_free(g)


@pytest.mark.parametrize("pattern", list(Pattern))
def test_pattern_graph_finds_itself(pattern):
    p = pattern_graph(pattern)
    cert = find_induced(p, pattern)
    assert cert is not None and induces_pattern(p, cert.vertices, pattern)


@given(graphs(max_n=8), st.sampled_from(list(Pattern)))
def test_find_induced_matches_networkx(g, pattern):
    cert = find_induced(g, pattern)
    assert (cert is not None) == oracles.has_induced(g, pattern_graph(pattern))
    if cert is not None:
        assert cert.kind == FORBIDDEN_SUBGRAPH
        assert induces_pattern(g, cert.vertices, pattern)


@given(graphs(max_n=7), st.sampled_from([Pattern.C4, Pattern.CLAW, Pattern.DIAMOND, Pattern.P3]))
def test_find_induced_matches_bruteforce(g, pattern):
    assert (find_induced(g, pattern) is None) == (find_induced_bruteforce(g, pattern) is None)


@given(graphs(min_n=6, max_n=11))
def test_cobridge_matches_networkx(g):
    assert bool(is_cobridge_free(g)) == (not oracles.has_induced(g, pattern_graph(Pattern.C4_2K1)))


# ----------------------------------------------------------- orientation

def test_orientation_examples():
    assert is_orientable(prism())
    v = is_orientable(cycle_graph(5))
    assert v and v.value.cyclic == {}
    v = is_orientable(line_k33())
    assert v and orientation_violations(line_k33(), v.value) == []


def test_schlafli_not_orientable():
    g = schlafli_complement()
    v = is_orientable(g)
    assert not v
    assert v.certificate.kind == ODD_PARITY_CYCLE
    assert odd_cycle_is_valid(g, v.certificate)


@given(prismatic_instances())
def test_orientation_sound(inst):
    g = inst.graph
    v = is_orientable(g)
    if v:
        assert orientation_violations(g, v.value) == []
    else:
        assert odd_cycle_is_valid(g, v.certificate)
    if len(g.triangles()) <= 12:
        assert bool(v) == oracles.is_orientable(g)


# -------------------------------------------------------------- colouring

def test_lk33_coloring_is_rows_or_columns():
    g = line_k33()
    col = three_coloring(g)
    assert col.is_proper(g)
    rows = {frozenset(lk33_index(i, j) for j in (1, 2, 3)) for i in (1, 2, 3)}
    cols = {frozenset(lk33_index(i, j) for i in (1, 2, 3)) for j in (1, 2, 3)}
    assert set(col.classes) in (rows, cols)


def test_not_three_colourable():
    assert three_coloring(core_ring_of_five()) is None
    assert three_coloring(complete_graph(4)) is None
    assert three_coloring(petersen()).is_proper(petersen())


def test_coloring_cap():
    with pytest.raises(ScaleLimitExceeded):
        three_coloring(build_graph(61, []))


@given(graphs(max_n=8))
def test_coloring_matches_exhaustive(g):
    col = three_coloring(g)
    assert (col is not None) == oracles.three_colorable(g)
    if col is not None:
        assert col.is_proper(g)


# --------------------------------------------------------- substantiality

def test_substantial_examples():
    v = is_k_substantial(cycle_graph(5), 1)
    assert not v and v.certificate.vertices == ()
    assert is_k_substantial(prism(), 2)
    v = is_k_substantial(prism(), 3)
    assert not v and len(v.certificate.vertices) == 2


def definitional(g, k):
    """Every S with |S| < k misses some triangle."""
    tris = [set(t) for t in oracles.triangles(g)]
    return all(any(not t & set(s) for t in tris) for size in range(k) for s in combinations(range(g.n), size))


@given(graphs(max_n=8), st.integers(1, 4))
def test_substantial_matches_definition(g, k):
    assert bool(is_k_substantial(g, k)) == definitional(g, k)


def test_weaker_reading_is_not_the_definition():
    # "not k-substantial => Lambda <= k" would also accept prism at k = 2, which the definition rejects
    g = prism()
    assert oracles.hitting_number(g) <= 2
    assert definitional(g, 2) and is_k_substantial(g, 2)


# ---------------------------------------------------- bicoloured patterns

@given(prismatic_instances())
def test_bicolored_p3_with_two_disjoint_triangles(inst):
    g = inst.graph
    assume(g.n <= 30 and oracles.two_disjoint_triangles(g))
    col = three_coloring(g)
    assume(col is not None)
    for x in range(3):
        for y in range(3):
            if x != y:
                cert = find_bicolored_pattern(g, col, Pattern.P3, (x, y))
                assert cert is not None
                a, mid, b = cert.vertices
                assert induces_pattern(g, (a, mid, b), Pattern.P3)
                assert col.color_of(a) == col.color_of(b) == x and col.color_of(mid) == y


@given(graphs(max_n=8))
def test_bicolored_c4_on_bipartite(g):
    col = three_coloring(g)
    assume(col is not None and not col.classes[2])
    cert = find_bicolored_pattern(g, col, Pattern.C4)
    assert (cert is not None) == (find_induced_bruteforce(g, Pattern.C4) is not None)


def test_edgeless_has_no_bicolored_pattern():
    g = build_graph(5, [])
    col = Coloring.from_assignment([0, 1, 2, 0, 1])
    for pattern in (Pattern.P3, Pattern.C4, Pattern.C4_K1):
        assert find_bicolored_pattern(g, col, pattern) is None
