import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monophilic.counting import (
    ListAssignment,
    Pin,
    col,
    col_brute_force,
    col_pinned,
    col_uniform,
    find_coloring,
    induce,
    is_proper_coloring,
    separating_edge_surgery,
    side_of_edge,
)
from monophilic.errors import InputError
from monophilic.graph import Graph, build_complete, build_complete_bipartite, build_cycle, build_path

from conftest import graphs, graphs_with_lists


def chromatic_polynomial(g, n):
    # deletion-contraction on a plain edge set, independent of the engine
    def rec(vertices, edges):
        if not edges:
            return n ** len(vertices)
        (u, v), rest = edges[0], edges[1:]
        merged = set()
        for a, b in rest:
            a, b = (u if a == v else a), (u if b == v else b)
            if a != b:
                merged.add((min(a, b), max(a, b)))
        return rec(vertices, rest) - rec(vertices - {v}, sorted(merged))

    return rec(frozenset(g.vertices()), g.sorted_edges())


@settings(max_examples=300, deadline=None)
@given(graphs_with_lists())
def test_col_matches_brute_force(case):
    g, L = case
    assert col(g, L) == col_brute_force(g, L)


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=6), st.integers(1, 4))
def test_uniform_count_is_chromatic_polynomial(g, n):
    assert col_uniform(g, n) == chromatic_polynomial(g, n)


@settings(max_examples=100, deadline=None)
@given(graphs_with_lists(max_vertices=5, max_colors=5))
def test_color_renaming_invariance(case):
    g, L = case
    colors = sorted(L.colors())
    mapping = {c: 100 + i for i, c in enumerate(reversed(colors))}
    assert col(g, L.rename_colors(mapping)) == col(g, L)


@settings(max_examples=100, deadline=None)
@given(graphs_with_lists(max_vertices=5), st.randoms(use_true_random=False))
def test_vertex_relabel_invariance(case, rnd):
    g, L = case
    perm = list(g.vertices())
    rnd.shuffle(perm)
    # vertex v of the relabelled graph is old vertex perm[v]
    inverse = {old: new for new, old in enumerate(perm)}
    h = Graph(g.vertex_count, [(inverse[u], inverse[v]) for u, v in g.edges])
    assert col(h, L.permute_vertices(perm)) == col(g, L)


@settings(max_examples=100, deadline=None)
@given(graphs_with_lists(max_vertices=5, max_colors=4))
def test_pins_partition_the_count(case):
    g, L = case
    v = 0
    assert sum(col_pinned(g, L, [Pin(v, c)]) for c in L[v]) == col(g, L)


@settings(max_examples=100, deadline=None)
@given(graphs_with_lists(max_vertices=6, max_colors=4))
def test_find_coloring_agrees_with_count(case):
    g, L = case
    gamma = find_coloring(g, L)
    assert (gamma is not None) == (col(g, L) > 0)
    if gamma is not None:
        assert is_proper_coloring(g, L, gamma)


def test_known_counts():
    assert col_uniform(build_complete_bipartite(2, 3), 2) == 2
    assert col_uniform(build_path(1), 1) == 0
    assert col_uniform(build_complete(4), 4) == 24
    remark = ListAssignment([[1, 2], [1, 2], [2, 3], [2, 3]])
    assert col(build_cycle(4), remark) == 2
    assert col(build_path(2), ListAssignment([[1], [], [1]])) == 0


def test_counts_are_exact_big_integers():
    g = Graph(60)
    assert col_uniform(g, 7) == 7 ** 60


def test_induce_strikes_pin_colors():
    g = build_path(2)
    L = ListAssignment([[1, 2], [1, 2, 3], [2, 3]])
    sub, lists = induce(g, L, [(1, 2)])
    assert sub.vertex_count == 2 and sub.edge_count == 0
    assert lists.lists == (frozenset({1}), frozenset({3}))
    assert col_pinned(g, L, [(1, 2)]) == 1


def test_adjacent_equal_pins_give_zero():
    g = build_path(1)
    L = ListAssignment([[1], [1, 2]])
    assert col_pinned(g, L, [(0, 1), (1, 1)]) == 0


@pytest.mark.parametrize("pins", [[(5, 1)], [(0, 3)], [(0, 1), (0, 2)]])
def test_bad_pins(pins):
    g = build_path(1)
    with pytest.raises(InputError):
        col_pinned(g, ListAssignment([[1, 2], [1, 2]]), pins)


def test_assignment_validation_and_json():
    with pytest.raises(InputError):
        ListAssignment([[0]])
    with pytest.raises(InputError):
        ListAssignment({1: [1]})
    with pytest.raises(InputError):
        ListAssignment.from_json({"lists": {"0": [1, 1]}})
    with pytest.raises(InputError):
        col(build_path(1), ListAssignment([[1]]))
    L = ListAssignment({0: [2, 1], 1: [3]})
    text = L.dumps()
    assert json.loads(text) == {"lists": {"0": [1, 2], "1": [3]}}
    assert ListAssignment.from_json(json.loads(text)) == L


def test_side_of_edge():
    g = Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert side_of_edge(g, 2, 3) == {3}
    assert side_of_edge(g, 0, 1) is None


@settings(max_examples=150, deadline=None)
@given(graphs_with_lists(max_vertices=6, max_colors=5), st.data())
def test_bridge_surgery_nests_and_never_increases(case, data):
    g, L = case
    from monophilic.graph import bridges

    cut = bridges(g)
    if not cut:
        return
    u, v = data.draw(st.sampled_from(cut))
    if data.draw(st.booleans()):
        u, v = v, u
    M = separating_edge_surgery(g, L, (u, v))
    assert M[u] <= M[v] or M[v] <= M[u]
    assert M.sizes() == L.sizes()
    assert col(g, M) <= col(g, L)
