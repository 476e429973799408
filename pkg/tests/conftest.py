import pytest
from hypothesis import strategies as st

from monophilic.counting import ListAssignment
from monophilic.graph import Graph


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def graphs_with_lists(draw, max_vertices=6, max_colors=6, max_size=4):
    g = draw(graphs(max_vertices=max_vertices))
    colors = st.integers(1, max_colors)
    lists = [draw(st.frozensets(colors, max_size=max_size)) for _ in range(g.vertex_count)]
    return g, ListAssignment(lists)


@pytest.fixture
def tmp_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path
