import json

import networkx as nx
import pytest
from hypothesis import given, settings

from monophilic.errors import InputError
from monophilic.graph import (
    Graph,
    bridges,
    build_complete,
    build_complete_bipartite,
    build_complete_tripartite,
    build_cycle,
    build_path,
    build_theta,
    build_vertex,
    cartesian_product,
    classify_core_shape,
    connected_components,
    core,
    core_vertices,
    disjoint_union,
    is_bipartite,
    is_chordal,
    is_connected,
    is_elimination_ordering,
    line_graph,
    theta_lengths,
    two_coloring,
)

from conftest import graphs


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices())
    G.add_edges_from(g.sorted_edges())
    return G


def test_rejects_loops_multi_edges_and_bad_ids():
    with pytest.raises(InputError):
        Graph(2, [(0, 0)])
    with pytest.raises(InputError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(2, [(0, 2)])


def test_json_round_trip_is_byte_stable():
    g = Graph(4, [(3, 2), (0, 1), (1, 2)])
    text = g.dumps()
    h = Graph.from_json(json.loads(text))
    assert h == g
    assert h.dumps() == text
    assert json.loads(text) == {"vertices": 4, "edges": [[0, 1], [1, 2], [2, 3]]}


@pytest.mark.parametrize("bad", [[], {"edges": []}, {"vertices": 2, "edges": "x"}])
def test_from_json_rejects_malformed(bad):
    with pytest.raises(InputError):
        Graph.from_json(bad)


def test_builders_sizes():
    assert build_vertex().vertex_count == 1
    assert (build_path(3).vertex_count, build_path(3).edge_count) == (4, 3)
    assert (build_cycle(5).vertex_count, build_cycle(5).edge_count) == (5, 5)
    assert build_complete(4).edge_count == 6
    k23 = build_complete_bipartite(2, 3)
    assert (k23.vertex_count, k23.edge_count) == (5, 6)
    assert not k23.has_edge(0, 1) and k23.has_edge(0, 2)
    assert build_complete_tripartite(1, 1, 1).edge_count == 3


def test_builder_errors():
    for bad in (lambda: build_path(0), lambda: build_cycle(2), lambda: build_theta(1, 1, 3),
                lambda: build_theta(0, 2, 2), lambda: build_complete(0)):
        with pytest.raises(InputError):
            bad()


def test_theta_vertex_count_and_shape():
    t = build_theta(4, 2, 2)
    # two hubs plus a + b + c - 3 interior vertices
    assert t.vertex_count == 7 and t.edge_count == 8
    assert theta_lengths(t) == (2, 2, 4)
    assert theta_lengths(build_theta(1, 2, 3)) == (1, 2, 3)
    assert nx.is_isomorphic(to_nx(build_theta(2, 2, 2)), to_nx(build_complete_bipartite(2, 3)))


def test_cartesian_product_grid():
    grid = cartesian_product(build_path(2), build_path(3))
    assert (grid.vertex_count, grid.edge_count) == (12, 17)
    assert nx.is_isomorphic(to_nx(grid), nx.grid_2d_graph(3, 4))


def test_line_graph_of_star_is_triangle():
    assert line_graph(build_complete_bipartite(1, 3)) == build_complete(3)


def test_disjoint_union_components():
    g = disjoint_union(build_cycle(3), build_path(1))
    assert g.vertex_count == 5
    assert sorted(map(sorted, connected_components(g))) == [[0, 1, 2], [3, 4]]
    assert not is_connected(g)


def test_core_peels_trees_to_one_vertex():
    assert core(build_path(5)).vertex_count == 1
    lollipop = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    assert core_vertices(lollipop) == [0, 1, 2]
    with pytest.raises(InputError):
        core(Graph(2))


def test_core_shapes():
    assert str(classify_core_shape(build_vertex())) == "SingleVertex"
    assert classify_core_shape(build_cycle(6)).params == (6,)
    assert classify_core_shape(build_cycle(5)).tag == "OddCyclePresent"
    assert classify_core_shape(build_complete_bipartite(2, 3)).tag == "K23"
    assert str(classify_core_shape(build_theta(2, 2, 4))) == "Theta(2,2,4)"
    assert classify_core_shape(build_complete_bipartite(2, 4)).tag == "Other"


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_predicates_agree_with_networkx(g):
    G = to_nx(g)
    assert is_connected(g) == nx.is_connected(G)
    assert is_bipartite(g) == nx.is_bipartite(G)
    coloring = two_coloring(g)
    if coloring is not None:
        assert all(coloring[u] != coloring[v] for u, v in g.edges)
    assert bridges(g) == sorted(tuple(sorted(e)) for e in nx.bridges(G))
    chordal, order = is_chordal(g)
    assert chordal == nx.is_chordal(G)
    if chordal:
        assert is_elimination_ordering(g, order)
    if nx.is_connected(G):
        k = nx.k_core(G, 2)
        expected = sorted(k.nodes) if k.number_of_nodes() else None
        got = core_vertices(g)
        if expected is None:
            assert len(got) == 1
        else:
            assert got == expected
