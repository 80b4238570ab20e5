from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from gbei.graph import (
    DisconnectedGraphError,
    GraphFormatError,
    SimpleGraph,
    attach_tree,
    classify_family,
    clique_sum,
    complete_bipartite,
    complete_graph,
    connected_graphs,
    cut_sets,
    cycle_graph,
    diamond,
    is_isomorphic,
    join,
    max_clique,
    null_graph,
    parse_graph,
    path_graph,
    read_graph,
    star_graph,
    vertex_connectivity,
    with_pendant_paths,
    write_graph,
)


def atlas_connected(max_n: int):
    """Every connected graph on 1..max_n vertices, one per isomorphism class."""
    out = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(SimpleGraph(h.number_of_nodes(), [(a + 1, b + 1) for a, b in h.edges()]))
    return out


def to_nx(g: SimpleGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def nx_c(h: nx.Graph, t) -> int:
    sub = h.copy()
    sub.remove_nodes_from(t)
    return nx.number_connected_components(sub)


def brute_cut_sets(g: SimpleGraph):
    h = to_nx(g)
    out = []
    for size in range(g.n + 1):
        for t in combinations(g.vertices, size):
            if not t:
                out.append(t)
                continue
            ct = nx_c(h, t)
            if all(nx_c(h, [v for v in t if v != i]) < ct for i in t):
                out.append(t)
    return sorted(out)


ATLAS7 = atlas_connected(7)


# -- components and cut sets --------------------------------------------------------------


def test_components_examples():
    c4 = cycle_graph(4)
    assert c4.components_after_deletion(()) == [(1, 2, 3, 4)]
    assert c4.components_after_deletion((2, 4)) == [(1,), (3,)]
    assert c4.c((2, 4)) == 2
    assert path_graph(3).components_after_deletion((2,)) == [(1,), (3,)]


def test_cut_set_examples():
    assert cut_sets(complete_graph(5)) == [()]
    assert cut_sets(cycle_graph(4)) == [(), (1, 3), (2, 4)]
    assert cut_sets(path_graph(3)) == [(), (2,)]


def test_cut_sets_reject_disconnected():
    with pytest.raises(DisconnectedGraphError):
        cut_sets(SimpleGraph(3, [(1, 2)]))


def test_cut_sets_match_definition_on_all_graphs_up_to_seven_vertices():
    assert len(ATLAS7) == 996
    for g in ATLAS7:
        assert cut_sets(g) == brute_cut_sets(g), g


def test_cut_sets_match_definition_on_every_labelled_graph_up_to_five():
    for n in range(1, 6):
        for g in connected_graphs(n):
            assert cut_sets(g) == brute_cut_sets(g)


def test_nonempty_cut_sets_disconnect():
    for g in ATLAS7:
        for t in cut_sets(g):
            if t:
                assert g.c(t) >= 2


# -- connectivity and cliques -------------------------------------------------------------


def test_connectivity_examples():
    assert vertex_connectivity(complete_graph(4)) == 3
    assert vertex_connectivity(cycle_graph(4)) == 2
    assert vertex_connectivity(star_graph(3)) == 1
    with pytest.raises(DisconnectedGraphError):
        vertex_connectivity(null_graph(3))


def test_connectivity_and_clique_match_networkx():
    for g in ATLAS7:
        h = to_nx(g)
        assert max_clique(g) == max(len(c) for c in nx.find_cliques(h))
        if g.n < 2:
            continue
        k = vertex_connectivity(g)
        complete = len(g.edges) == g.n * (g.n - 1) // 2
        assert k == (g.n - 1 if complete else nx.node_connectivity(h))
        assert k < g.n
        assert (k == g.n - 1) == complete


def test_max_clique_examples():
    assert max_clique(null_graph(4)) == 1
    assert max_clique(diamond()) == 3
    assert max_clique(complete_graph(6)) == 6


# -- constructors and recognizers -----------------------------------------------------------


def test_classify_family_examples():
    assert classify_family(path_graph(3)) == {"path", "tree", "star", "complete_bipartite(1,2)"}
    assert classify_family(cycle_graph(3)) == {"cycle", "triangle", "complete"}
    k4_minus = SimpleGraph(4, [e for e in complete_graph(4).edges if e != (1, 2)])
    assert classify_family(k4_minus) == {"diamond"}
    assert "null" in classify_family(null_graph(3))
    assert "complete_bipartite(2,3)" in classify_family(complete_bipartite(2, 3))


def test_join_examples():
    edge = SimpleGraph(2, [(1, 2)])
    other = SimpleGraph(3, [(1, 2)])
    g, shift = join(edge, other)
    assert shift == {1: 3, 2: 4, 3: 5}
    assert g.sorted_edges() == [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4)]
    for p in range(1, 6):
        g, _ = join(null_graph(p), null_graph(2))
        assert is_isomorphic(g, complete_bipartite(2, p))


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_join_edge_count(p, q, data):
    pairs_g = list(combinations(range(1, p + 1), 2))
    pairs_h = list(combinations(range(1, q + 1), 2))
    eg = data.draw(st.lists(st.sampled_from(pairs_g), unique=True)) if pairs_g else []
    eh = data.draw(st.lists(st.sampled_from(pairs_h), unique=True)) if pairs_h else []
    g, h = SimpleGraph(p, eg), SimpleGraph(q, eh)
    joined, _ = join(g, h)
    assert len(joined.edges) == p * q + len(eg) + len(eh)


def test_clique_sum_and_attach_tree():
    g, mapping = clique_sum(diamond(), path_graph(3), [(1, 1)])
    assert g.n == 6 and mapping == {1: 1, 2: 5, 3: 6}
    assert g.edges == diamond().edges | {(1, 5), (5, 6)}
    with pytest.raises(ValueError):
        clique_sum(diamond(), cycle_graph(4), [(2, 1), (4, 3)])
    t, _ = attach_tree(complete_graph(3), 2, star_graph(3))
    assert t.n == 5 and len(t.edges) == 5
    with pytest.raises(ValueError):
        attach_tree(complete_graph(3), 1, cycle_graph(3))


def test_with_pendant_paths():
    g = with_pendant_paths(complete_graph(4), 9)
    assert g.n == 9 and len(g.edges) == 6 + 5
    assert g.degree(1) == 4 and g.degree(2) == 4
    with pytest.raises(ValueError):
        with_pendant_paths(complete_graph(4), 5)


def test_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimpleGraph(3, [(1, 4)])
    assert SimpleGraph(3, [(2, 1), (1, 2)]).edges == {(1, 2)}


# -- file format -----------------------------------------------------------------------


def test_parse_graph_with_comments():
    g = parse_graph("# a square\n4\n1 2\n2 3  # side\n\n3 4\n4 1\n")
    assert g == cycle_graph(4)


@pytest.mark.parametrize("text", ["", "x\n1 2", "3\n1 2 3", "3\n1 a", "3\n1 5", "2\n1 1"])
def test_parse_graph_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_graph_file_roundtrip(tmp_path):
    g = with_pendant_paths(diamond(), 7)
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g
    assert path.read_text().splitlines()[0] == "7"
    assert path.read_text() == g.to_text()
