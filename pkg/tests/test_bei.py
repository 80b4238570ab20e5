from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from test_graph import ATLAS7
from gbei.bei import (
    build_gbei,
    classify_aci,
    classify_ci,
    clique_with_trees,
    decompose_verify,
    height_formula,
    is_edge_join_edge_plus_point,
    join_split,
    join_with_2k1,
    minimal_primes,
    mu,
    pairwise_cd_lower,
    prime_component,
    subgraph_embedding,
    sum_height_empty_T,
    two_paths_two_rungs,
)
from gbei.field_poly import Ideal, Limits, RingSpec, binomial_f, height_oracle, ideal_equal, variable
from gbei.graph import (
    DisconnectedGraphError,
    SimpleGraph,
    attach_tree,
    complete_bipartite,
    complete_graph,
    connected_graphs,
    cut_sets,
    cycle_graph,
    diamond,
    join,
    null_graph,
    path_graph,
    star_graph,
    with_pendant_paths,
)

EDGE = SimpleGraph(2, [(1, 2)])


# -- construction ------------------------------------------------------------------------


def test_build_examples():
    j = build_gbei(2, EDGE)
    assert j.ideal.generators == (binomial_f(RingSpec(2, 2), 1, 2),)
    assert j.mu == 1
    assert build_gbei(2, cycle_graph(4)).mu == 4
    assert build_gbei(3, EDGE).mu == 3
    with pytest.raises(ValueError):
        build_gbei(1, EDGE)


@given(st.integers(2, 5), st.sampled_from(ATLAS7[:200]))
def test_generator_count_and_mu(m, g):
    j = build_gbei(m, g)
    assert j.mu == mu(m, g) == m * (m - 1) // 2 * len(g.edges)
    assert len(set(j.ideal.generators)) == j.mu


def test_prime_component_examples():
    r = RingSpec(2, 4)
    p = prime_component(2, cycle_graph(4), (2, 4))
    assert p.height == 4
    assert ideal_equal(p.ideal, Ideal(r, [variable(r, k, i) for i in (2, 4) for k in (1, 2)]))
    g = path_graph(5)
    p0 = prime_component(3, g, ())
    assert p0.height == 2 * 4
    assert ideal_equal(p0.ideal, build_gbei(3, complete_graph(5)).ideal)
    p3 = prime_component(2, path_graph(3), (2,))
    assert p3.height == 2 and p3.components == ((1,), (3,))


def test_minimal_prime_examples():
    assert [p.T for p in minimal_primes(2, complete_graph(4))] == [()]
    assert [p.T for p in minimal_primes(2, cycle_graph(4))] == [(), (1, 3), (2, 4)]
    assert [p.T for p in minimal_primes(2, path_graph(3))] == [(), (2,)]
    with pytest.raises(DisconnectedGraphError):
        minimal_primes(2, null_graph(2))


def test_prime_heights_match_oracle():
    for g in connected_graphs(4):
        for m in (2, 3):
            for p in minimal_primes(m, g):
                assert p.height == height_oracle(p.ideal)


# -- heights ------------------------------------------------------------------------------


def test_height_examples():
    for n in range(2, 8):
        assert height_formula(2, path_graph(n)) == n - 1
    for m in (2, 3, 4, 5):
        assert height_formula(m, star_graph(4)) == m
    assert height_formula(2, cycle_graph(4)) == 3


def test_height_formula_matches_oracle_small():
    for n in range(2, 5):
        for g in connected_graphs(n):
            assert height_formula(2, g) == height_oracle(build_gbei(2, g).ideal)
    for g in connected_graphs(3):
        assert height_formula(3, g) == height_oracle(build_gbei(3, g).ideal)


def test_sum_height_examples():
    assert sum_height_empty_T(2, cycle_graph(4), (2, 4)) == 5
    assert sum_height_empty_T(3, star_graph(4), (1,)) == 7
    assert sum_height_empty_T(3, star_graph(3), (1,)) == 5
    with pytest.raises(ValueError):
        sum_height_empty_T(2, cycle_graph(4), ())


def test_sum_height_meets_connectivity_floor_on_every_cut_set():
    for g in ATLAS7:
        for t in cut_sets(g)[1:]:
            for m in (2, 3):
                assert sum_height_empty_T(m, g, t) >= (m - 1) * (g.n - 1) + 1


def test_pairwise_cd_lower_examples():
    assert pairwise_cd_lower(2, cycle_graph(4), (2, 4)) == 4
    for m in (2, 3, 4):
        for n in (4, 5, 6):
            assert pairwise_cd_lower(m, path_graph(n), tuple(range(2, n))) == m * n - m - 2
    assert pairwise_cd_lower(3, path_graph(4), (2,)) == 12 - 3 - 4 + 1
    with pytest.raises(ValueError):
        pairwise_cd_lower(2, cycle_graph(4), ())
    with pytest.raises(ValueError):
        pairwise_cd_lower(2, cycle_graph(4), (1,))


# -- complete and almost complete intersections ----------------------------------------------


def test_ci_examples():
    assert classify_ci(2, path_graph(5))[0]
    assert not classify_ci(3, path_graph(5))[0]
    assert not classify_ci(2, cycle_graph(4))[0]


def test_aci_examples():
    assert classify_aci(3, EDGE)
    assert not classify_aci(4, EDGE)
    assert classify_aci(2, cycle_graph(4))
    assert not classify_aci(2, path_graph(4))


def test_ci_structural_and_numeric_agree_up_to_seven_vertices():
    for g in ATLAS7:
        if g.n < 2:
            continue
        for m in (2, 3):
            ci, _ = classify_ci(m, g)  # raises on disagreement
            assert ci == (len(g.edges) == g.n - 1 and m == 2 and all(g.degree(v) <= 2 for v in g.vertices))


def test_aci_for_unicyclic_and_path_plus_edge_graphs():
    # mu = ht + 1 for m = 2 exactly when the graph has n edges and height n - 1
    for g in ATLAS7:
        if g.n < 2:
            continue
        assert classify_aci(2, g) == (len(g.edges) == height_formula(2, g) + 1)


# -- decomposition ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "g", [complete_graph(4), cycle_graph(4), path_graph(4), star_graph(4), diamond()], ids=["K4", "C4", "P4", "S4", "diamond"]
)
def test_decompose_examples(g):
    res = decompose_verify(2, g)
    assert res.ok and res.cut_sets == tuple(cut_sets(g))


def test_decompose_char_p_and_m3():
    assert decompose_verify(2, cycle_graph(4), 3).ok
    assert decompose_verify(3, path_graph(3)).ok


def test_decompose_reports_not_attempted_under_cap():
    res = decompose_verify(2, cycle_graph(5), limits=Limits(max_terms=5))
    assert res.status == "not_attempted" and not res.ok


# -- family recognizers -------------------------------------------------------------------------


def test_clique_with_trees():
    for n in range(6, 10):
        g = with_pendant_paths(complete_graph(4), n)
        assert clique_with_trees(g, "K4") == ((1, 2, 3, 4), (1, 2))
        d = with_pendant_paths(diamond(), n, anchors=(1, 3))
        assert clique_with_trees(d, "diamond") is not None
        assert clique_with_trees(d, "K4") is None
    one_side, _ = attach_tree(complete_graph(4), 1, path_graph(3))
    assert clique_with_trees(one_side, "K4") is None
    # a tree hanging from two clique vertices closes a cycle
    assert clique_with_trees(SimpleGraph(6, list(complete_graph(4).edges) + [(1, 5), (5, 6), (6, 2)]), "K4") is None


def test_join_with_2k1_and_split():
    g, _ = join(path_graph(3), null_graph(2))
    assert join_with_2k1(g) == [(1, 3, 2), (4, 5, 2)]  # symmetric: {1,3} also splits off
    assert join_with_2k1(cycle_graph(4)) == [(1, 3, 0), (2, 4, 0)]
    basic, _ = join(EDGE, SimpleGraph(3, [(1, 2)]))
    assert is_edge_join_edge_plus_point(basic)
    assert join_split(basic) is not None
    assert join_split(complete_bipartite(2, 3)) is None


def test_two_paths_two_rungs():
    g = SimpleGraph(6, [(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5)])
    assert two_paths_two_rungs(g) is not None
    assert two_paths_two_rungs(cycle_graph(6)) is None


def test_subgraph_embedding():
    emb = subgraph_embedding(cycle_graph(4), complete_bipartite(2, 3))
    assert emb is not None
    assert all(complete_bipartite(2, 3).has_edge(emb[a], emb[b]) for a, b in cycle_graph(4).edges)
    assert subgraph_embedding(cycle_graph(3), complete_bipartite(2, 3)) is None
