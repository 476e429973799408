import networkx as nx
import pytest

from monophilic.classify import classify_2_choosable, classify_2_monophilic
from monophilic.errors import InputError
from monophilic.graph import (
    Graph,
    build_complete,
    build_complete_bipartite,
    build_cycle,
    build_path,
    build_theta,
    build_vertex,
    cartesian_product,
    disjoint_union,
)
from monophilic.search import is_choosable, is_monophilic


@pytest.mark.parametrize("g,mono,choos", [
    (build_vertex(), True, True),
    (build_path(5), True, True),
    (build_cycle(4), True, True),
    (build_cycle(8), True, True),
    (build_cycle(5), True, False),
    (build_complete(4), True, False),
    (build_complete_bipartite(2, 3), True, True),
    (build_theta(2, 2, 4), False, True),
    (build_theta(2, 2, 6), False, True),
    (build_theta(2, 3, 3), True, False),
    (build_theta(1, 3, 3), False, False),
    (build_complete_bipartite(2, 4), False, False),
    (cartesian_product(build_path(2), build_path(3)), False, False),
])
def test_known_answers(g, mono, choos):
    assert classify_2_monophilic(g) is mono
    assert classify_2_choosable(g) is choos


def test_tails_do_not_matter():
    # K_{2,3} with a pendant path is still classified by its core
    k = build_complete_bipartite(2, 3)
    g = Graph(7, list(k.edges) + [(4, 5), (5, 6)])
    assert classify_2_monophilic(g) and classify_2_choosable(g)


def test_disconnected_is_rejected():
    with pytest.raises(InputError):
        classify_2_monophilic(disjoint_union(build_path(1), build_path(1)))


def test_agrees_with_search_up_to_five_vertices():
    # the six-vertex sweep lives in the acceptance suite
    for G in nx.graph_atlas_g()[1:53]:
        if not nx.is_connected(G):
            continue
        g = Graph(G.number_of_nodes(), list(G.edges()))
        assert classify_2_monophilic(g) == is_monophilic(g, 2).monophilic, g
        assert classify_2_choosable(g) == is_choosable(g, 2).choosable, g
