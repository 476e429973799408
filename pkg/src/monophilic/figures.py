"""Matplotlib renderings written next to the JSON-lines reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from . import paths  # noqa: E402


def _to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices())
    G.add_edges_from(g.sorted_edges())
    return G


def draw_assignment(g, L, filename, title=None, count=None):
    """Draw g with each vertex labelled by its color list."""
    G = _to_nx(g)
    pos = nx.spring_layout(G, seed=1)
    fig, ax = plt.subplots(figsize=(5, 4))
    nx.draw_networkx_edges(G, pos, ax=ax, width=1.2)
    nx.draw_networkx_nodes(G, pos, ax=ax, node_color="white", edgecolors="black", node_size=700)
    labels = {v: ",".join(map(str, sorted(L[v]))) for v in g.vertices()}
    nx.draw_networkx_labels(G, pos, labels, ax=ax, font_size=8)
    text = title or ""
    if count is not None:
        text = f"{text}  (col = {count})".strip()
    ax.set_title(text, fontsize=10)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(filename, dpi=150)
    plt.close(fig)
    return filename


def plot_path_counts(filename, k_max=12, ns=(2, 3, 4, 5)):
    """A(k, n) and B(k, n) against path length, log scale."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ks = list(range(1, k_max + 1))
    for n in ns:
        a = [paths.A(k, n) for k in ks]
        b = [paths.B(k, n) for k in ks]
        line, = ax.plot(ks, [max(v, 0.5) for v in a], marker="o", label=f"A, n={n}")
        ax.plot(ks, [max(v, 0.5) for v in b], marker="s", linestyle="--", color=line.get_color(),
                label=f"B, n={n}")
    ax.set_yscale("log")
    ax.set_xlabel("path length k")
    ax.set_ylabel("colorings")
    ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    fig.savefig(filename, dpi=150)
    plt.close(fig)
    return filename
