"""Simple undirected graphs, the families used throughout the package, and
structural predicates (core, chordality, bipartiteness, theta shapes).

Vertices are always the dense integers ``0..V-1``.  Every builder documents
its numbering so that list-assignment files can refer to vertices by id.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import InputError


class Graph:
    """Immutable simple graph on vertices ``0..vertex_count-1``."""

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(vertex_count, int) or vertex_count < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {vertex_count!r}")
        adj = [set() for _ in range(vertex_count)]
        normalized = set()
        for edge in edges:
            if len(edge) != 2:
                raise InputError(f"edge {edge!r} does not have two endpoints")
            u, v = edge
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"edge {edge!r} has non-integer endpoints")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge {edge!r} out of range for {vertex_count} vertices")
            key = (min(u, v), max(u, v))
            if key in normalized:
                raise InputError(f"multi-edge {key}")
            normalized.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self._n = vertex_count
        self._edges = frozenset(normalized)
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep`` relabelled in increasing order.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        old = sorted(set(keep))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(old), edges), old

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        if sorted(order) != list(range(self._n)):
            raise InputError("relabel order must be a permutation of the vertices")
        pos = {v: i for i, v in enumerate(order)}
        return Graph(self._n, [(pos[u], pos[v]) for u, v in self._edges])

    def __eq__(self, other):
        return isinstance(other, Graph) and self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph({self._n}, {self.sorted_edges()})"

    # JSON: {"vertices": N, "edges": [[u, v], ...]}
    def to_json(self) -> dict:
        return {"vertices": self._n, "edges": [list(e) for e in self.sorted_edges()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "Graph":
        if not isinstance(data, dict) or "vertices" not in data:
            raise InputError('graph JSON must be an object with a "vertices" field')
        edges = data.get("edges", [])
        if not isinstance(edges, list):
            raise InputError('graph "edges" must be a list')
        return cls(data["vertices"], [tuple(e) if isinstance(e, list) else e for e in edges])


# ---------------------------------------------------------------- builders

def build_vertex() -> Graph:
    return Graph(1)


def build_path(k: int) -> Graph:
    """Path of length ``k`` (k edges), vertices numbered along the path."""
    if k < 1:
        raise InputError("a path needs length at least 1; use build_vertex for a single vertex")
    return Graph(k + 1, [(i, i + 1) for i in range(k)])


def build_cycle(k: int) -> Graph:
    """Cycle on ``0..k-1`` in cyclic order."""
    if k < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs at least one vertex")
    return Graph(n, combinations(range(n), 2))


def build_complete_multipartite(*parts: int) -> Graph:
    """Parts are numbered consecutively: part 0 gets ``0..parts[0]-1`` and so on."""
    if not parts or any(p < 1 for p in parts):
        raise InputError("every part must be nonempty")
    blocks, start = [], 0
    for size in parts:
        blocks.append(range(start, start + size))
        start += size
    edges = []
    for x, y in combinations(blocks, 2):
        edges.extend(product(x, y))
    return Graph(start, edges)


def build_complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}; side A is ``0..m-1``, side B is ``m..m+n-1``."""
    return build_complete_multipartite(m, n)


def build_complete_tripartite(m: int, n: int, r: int = 1) -> Graph:
    return build_complete_multipartite(m, n, r)


def build_theta(a: int, b: int, c: int) -> Graph:
    """Two hubs joined by three internally disjoint paths of lengths a <= b <= c.

    The lengths are sorted first.  Hubs are 0 and 1; the interior vertices of
    the three paths follow in order (shortest path first), each listed from
    the hub-0 end.
    """
    lengths = sorted((a, b, c))
    if lengths[0] < 1:
        raise InputError("theta path lengths must be at least 1")
    if lengths[1] == 1:
        raise InputError("at most one theta path may have length 1 (otherwise multi-edge)")
    edges = []
    nxt = 2
    for length in lengths:
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return Graph(offset, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; the pair (x, y) gets id ``x * |V(h)| + y``."""
    nh = h.vertex_count
    edges = []
    for x in g.vertices():
        for y, z in h.edges:
            edges.append((x * nh + y, x * nh + z))
    for x, w in g.edges:
        for y in h.vertices():
            edges.append((x * nh + y, w * nh + y))
    return Graph(g.vertex_count * nh, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph with edges numbered in sorted order."""
    es = g.sorted_edges()
    pairs = [(i, j) for i, j in combinations(range(len(es)), 2) if set(es[i]) & set(es[j])]
    return Graph(len(es), pairs)


# -------------------------------------------------------------- predicates

def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and len(connected_components(g)) == 1


def two_coloring(g: Graph) -> list[int] | None:
    """Breadth-first 2-coloring (0/1 per vertex), or None if an odd cycle exists."""
    side = [-1] * g.vertex_count
    for s in g.vertices():
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Cut edges as sorted pairs (u < v), via low-link numbering."""
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    found = []
    timer = 0
    for root in g.vertices():
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        found.append((min(u, parent), max(u, parent)))
    return sorted(found)


def core_vertices(g: Graph) -> list[int]:
    """Vertices left after repeatedly deleting degree-1 vertices (connected g)."""
    if not is_connected(g):
        raise InputError("the core is only defined for connected graphs")
    deg = [g.degree(v) for v in g.vertices()]
    alive = [True] * g.vertex_count
    remaining = g.vertex_count
    queue = deque(v for v in g.vertices() if deg[v] == 1)
    while queue and remaining > 1:
        v = queue.popleft()
        if not alive[v] or deg[v] != 1:
            continue
        alive[v] = False
        remaining -= 1
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return [v for v in g.vertices() if alive[v]]


def core(g: Graph) -> Graph:
    """Core of a connected graph, relabelled preserving vertex order."""
    return g.induced_subgraph(core_vertices(g))[0]


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_chordal(g: Graph) -> tuple[bool, list[int] | None]:
    """Chordality by repeated removal of simplicial vertices.

    Returns ``(True, order)`` where ``order`` lists v_1..v_k such that the
    earlier neighbours of each v_i form a clique, or ``(False, None)``.
    Removing any simplicial vertex never destroys the existence of a
    simplicial elimination ordering, so the greedy choice is safe.
    """
    alive = set(g.vertices())
    removed = []
    while alive:
        for v in sorted(alive):
            if is_clique(g, g.neighbors(v) & alive):
                removed.append(v)
                alive.discard(v)
                break
        else:
            return False, None
    # removal order is the reverse of an elimination ordering
    return True, removed[::-1]


def is_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    if len(pos) != g.vertex_count:
        return False
    return all(is_clique(g, [w for w in g.neighbors(v) if pos[w] < pos[v]]) for v in order)


# ------------------------------------------------------------- core shapes

@dataclass(frozen=True)
class CoreShape:
    """Structural tag of a core.

    ``tag`` is one of SingleVertex, EvenCycle, OddCyclePresent, K23, Theta,
    Other.  ``params`` holds the cycle length or the sorted theta lengths.
    """

    tag: str
    params: tuple = ()

    def __str__(self):
        if self.params:
            return f"{self.tag}({','.join(map(str, self.params))})"
        return self.tag


def theta_lengths(g: Graph) -> tuple[int, int, int] | None:
    """Sorted (a, b, c) if g is a theta graph, else None."""
    if not is_connected(g):
        return None
    degs = [g.degree(v) for v in g.vertices()]
    hubs = [v for v in g.vertices() if degs[v] == 3]
    if len(hubs) != 2 or any(d not in (2, 3) for d in degs):
        return None
    start, end = hubs
    lengths = []
    for first in sorted(g.neighbors(start)):
        prev, cur, length = start, first, 1
        while cur != end:
            if degs[cur] != 2:
                return None
            (nxt,) = g.neighbors(cur) - {prev}
            prev, cur, length = cur, nxt, length + 1
        lengths.append(length)
    return tuple(sorted(lengths))


def classify_core_shape(g: Graph) -> CoreShape:
    """Tag a core (min degree >= 2, or a single vertex)."""
    if g.vertex_count == 1:
        return CoreShape("SingleVertex")
    if not is_bipartite(g):
        return CoreShape("OddCyclePresent")
    if is_connected(g) and all(g.degree(v) == 2 for v in g.vertices()):
        return CoreShape("EvenCycle", (g.vertex_count,))
    lengths = theta_lengths(g)
    if lengths is not None:
        if lengths == (2, 2, 2):
            return CoreShape("K23")
        return CoreShape("Theta", lengths)
    return CoreShape("Other")
