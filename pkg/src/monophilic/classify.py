"""Structural classification of 2-monophilic and 2-choosable connected graphs."""

from __future__ import annotations

from .errors import InputError
from .graph import Graph, classify_core_shape, core, is_bipartite, is_connected


def _core_shape(g: Graph):
    if not is_connected(g):
        raise InputError("classification needs a connected graph")
    return classify_core_shape(core(g))


def classify_2_monophilic(g: Graph) -> bool:
    """True iff the core is a single vertex, a cycle or K_{2,3}, or g has an odd cycle."""
    shape = _core_shape(g)
    if not is_bipartite(g):
        return True
    return shape.tag in {"SingleVertex", "EvenCycle", "K23"}


def classify_2_choosable(g: Graph) -> bool:
    """True iff the core is a single vertex, an even cycle, or theta(2, 2, 2m)."""
    shape = _core_shape(g)
    if shape.tag in {"SingleVertex", "EvenCycle", "K23"}:
        return True
    if shape.tag == "Theta":
        a, b, c = shape.params
        return a == 2 and b == 2 and c % 2 == 0
    return False
