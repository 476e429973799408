"""Small worked examples across the modules."""

import networkx as nx

from monophilic import paths
from monophilic.classify import classify_2_choosable, classify_2_monophilic
from monophilic.counting import ListAssignment, col, col_brute_force, col_pinned, col_uniform, induce
from monophilic.counting import separating_edge_surgery
from monophilic.graph import (
    Graph,
    build_complete,
    build_cycle,
    build_path,
    build_theta,
    build_vertex,
    cartesian_product,
    core,
    is_chordal,
)
from monophilic.search import enumerate_assignments, is_choosable, min_colorings, monophilic_number_probe


def test_builder_examples():
    assert build_path(1).sorted_edges() == [(0, 1)]
    assert build_path(3).sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    assert build_cycle(3) == build_complete(3)
    k2 = build_path(1)
    c4 = cartesian_product(k2, k2)
    assert nx.is_isomorphic(nx.Graph(c4.sorted_edges()), nx.cycle_graph(4))


def test_core_examples():
    c4_tail = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])
    assert core(c4_tail) == build_cycle(4)
    assert core(build_cycle(4)) == build_cycle(4)


def test_chordal_examples():
    assert is_chordal(build_path(4))[0]
    assert is_chordal(build_complete(4))[0]
    assert not is_chordal(build_cycle(4))[0]


def test_counting_examples():
    assert col_uniform(build_cycle(3), 3) == 6 == col_brute_force(build_cycle(3), ListAssignment.uniform(3, 3))
    assert col(build_path(1), ListAssignment([[1], [1]])) == 0
    c5 = build_cycle(5)
    u3 = ListAssignment.uniform(5, 3)
    for c in (1, 2, 3):
        assert col_pinned(c5, u3, [(2, c)]) == paths.A(3, 3)


def test_induce_example():
    sub, lists = induce(build_path(2), ListAssignment.uniform(3, 3), [(1, 1)])
    assert sub.edge_count == 0
    assert lists.lists == (frozenset({2, 3}), frozenset({2, 3}))


def test_surgery_examples():
    p3 = build_path(3)
    nested = ListAssignment([[1, 2], [1, 2], [1, 2, 3], [1, 2]])
    assert separating_edge_surgery(p3, nested, (1, 2)) == nested
    L = ListAssignment([[1, 2], [1, 2], [3, 4], [3, 4]])
    M = separating_edge_surgery(p3, L, (1, 2))
    assert M[1] <= M[2] or M[2] <= M[1]
    assert col_brute_force(p3, M) <= col_brute_force(p3, L)


def test_path_and_cycle_examples():
    assert paths.A(1, 3) == 2 and paths.B(1, 3) == 3
    assert paths.cycle_uniform_count(3, 3) == 6
    assert paths.cycle_uniform_count(4, 2) == 2
    assert paths.cycle_uniform_count(6, 3) == 66 == col_uniform(build_cycle(6), 3)


def test_class_examples():
    assert list(enumerate_assignments(build_vertex(), 2)) == [ListAssignment([[1, 2]])]
    edge = build_path(1)
    assert list(enumerate_assignments(edge, 1)) == [ListAssignment([[1], [1]]), ListAssignment([[1], [2]])]
    overlaps = sorted(len(L[0] & L[1]) for L in enumerate_assignments(edge, 2))
    assert overlaps == [0, 1, 2]


def test_decision_examples():
    assert min_colorings(build_complete(3), 2).count == 0
    r = is_choosable(build_cycle(3), 2)
    assert not r.choosable and r.witness == ListAssignment.uniform(3, 2)


def test_probe_examples():
    tree = Graph(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert all(row.monophilic for row in monophilic_number_probe(tree, 3).rows)
    rows = monophilic_number_probe(build_theta(2, 2, 4), 2).rows
    assert (rows[0].colorable, rows[0].monophilic, rows[0].vacuous) == (False, True, True)
    assert (rows[1].colorable, rows[1].monophilic) == (True, False)
    rows = monophilic_number_probe(build_cycle(4), 3).rows
    assert rows[1].monophilic and rows[2].monophilic


def test_classifier_examples():
    c5_tail = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)])
    assert classify_2_monophilic(c5_tail)
    assert not classify_2_choosable(build_cycle(5))
    assert classify_2_choosable(build_cycle(6))
