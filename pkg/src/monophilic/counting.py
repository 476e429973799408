"""Exact counting of list colorings.

``col(g, L)`` is computed by backtracking: split into connected components,
branch on the uncolored vertex with the fewest remaining colors, strike the
chosen color from its neighbours' lists, recurse.  Subproblems are memoized
per call on (vertex set, residual lists).  Counts are Python ints.
"""

from __future__ import annotations

import json
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import InputError
from .graph import Graph


class ListAssignment:
    """Per-vertex color lists; colors are positive integers.

    Built from a sequence (index = vertex) or a mapping ``vertex -> colors``
    whose keys are exactly ``0..V-1``.
    """

    __slots__ = ("_lists",)

    def __init__(self, lists):
        if isinstance(lists, Mapping):
            keys = sorted(int(k) for k in lists)
            if keys != list(range(len(keys))):
                raise InputError("list assignment keys must be the vertex ids 0..V-1")
            seq = [lists[k] if k in lists else lists[str(k)] for k in keys]
        else:
            seq = list(lists)
        out = []
        for v, colors in enumerate(seq):
            fs = frozenset(colors)
            for c in fs:
                if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                    raise InputError(f"vertex {v}: colors must be positive integers, got {c!r}")
            out.append(fs)
        self._lists = tuple(out)

    @classmethod
    def uniform(cls, vertex_count: int, n: int) -> "ListAssignment":
        return cls([range(1, n + 1)] * vertex_count)

    def __getitem__(self, v: int) -> frozenset:
        return self._lists[v]

    def __len__(self):
        return len(self._lists)

    def __iter__(self):
        return iter(self._lists)

    def __eq__(self, other):
        return isinstance(other, ListAssignment) and self._lists == other._lists

    def __hash__(self):
        return hash(self._lists)

    def __repr__(self):
        return "ListAssignment([" + ", ".join(str(sorted(s)) for s in self._lists) + "])"

    @property
    def lists(self) -> tuple:
        return self._lists

    def sizes(self) -> list[int]:
        return [len(s) for s in self._lists]

    def colors(self) -> set[int]:
        return set().union(*self._lists) if self._lists else set()

    def is_uniform(self) -> bool:
        return len(set(self._lists)) <= 1

    def rename_colors(self, mapping: Mapping[int, int]) -> "ListAssignment":
        return ListAssignment([{mapping.get(c, c) for c in s} for s in self._lists])

    def permute_vertices(self, perm: Sequence[int]) -> "ListAssignment":
        """New assignment whose vertex ``v`` carries this assignment's list at ``perm[v]``."""
        return ListAssignment([self._lists[perm[v]] for v in range(len(self._lists))])

    # JSON: {"lists": {"0": [1, 2], ...}}
    def to_json(self) -> dict:
        return {"lists": {str(v): sorted(s) for v, s in enumerate(self._lists)}}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data) -> "ListAssignment":
        if not isinstance(data, dict) or not isinstance(data.get("lists"), dict):
            raise InputError('list assignment JSON must be an object with a "lists" object')
        try:
            lists = {int(k): v for k, v in data["lists"].items()}
        except ValueError as exc:
            raise InputError(f"bad vertex key in lists: {exc}") from None
        for k, v in lists.items():
            if not isinstance(v, list):
                raise InputError(f"list for vertex {k} must be a JSON array")
            if len(set(v)) != len(v):
                raise InputError(f"list for vertex {k} has repeated colors")
        return cls(lists)


class Pin(NamedTuple):
    vertex: int
    color: int


def _check(g: Graph, L: ListAssignment):
    if len(L) != g.vertex_count:
        raise InputError(f"assignment covers {len(L)} vertices, graph has {g.vertex_count}")


def _check_pins(g: Graph, L: ListAssignment, pins):
    pins = [Pin(*p) for p in pins]
    seen = set()
    for v, c in pins:
        if not 0 <= v < g.vertex_count:
            raise InputError(f"pinned vertex {v} not in graph")
        if v in seen:
            raise InputError(f"vertex {v} pinned twice")
        seen.add(v)
        if c not in L[v]:
            raise InputError(f"pin color {c} not in list {sorted(L[v])} of vertex {v}")
    return pins


class _Counter:
    def __init__(self, g: Graph):
        self.adj = [g.neighbors(v) for v in g.vertices()]
        self.memo = {}

    def components(self, verts: frozenset):
        adj = self.adj
        left = set(verts)
        comps = []
        while left:
            s = left.pop()
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w in left:
                        left.discard(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        comps.sort(key=len)
        return comps

    def count(self, verts: frozenset, lists: dict) -> int:
        total = 1
        for comp in self.components(verts):
            total *= self.count_connected(comp, lists)
            if total == 0:
                return 0
        return total

    def count_connected(self, comp: frozenset, lists: dict) -> int:
        if len(comp) == 1:
            (v,) = comp
            return len(lists[v])
        if len(comp) == 2:
            u, v = comp
            return len(lists[u]) * len(lists[v]) - len(lists[u] & lists[v])
        key = (comp, tuple(lists[v] for v in sorted(comp)))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        adj = self.adj
        v = min(comp, key=lambda u: (len(lists[u]), -len(adj[u] & comp), u))
        rest = comp - {v}
        nbrs = [w for w in adj[v] if w in rest]
        total = 0
        for c in lists[v]:
            sub = dict(lists)
            dead = False
            for w in nbrs:
                if c in sub[w]:
                    sub[w] = sub[w] - {c}
                    if not sub[w]:
                        dead = True
                        break
            if not dead:
                total += self.count(rest, sub)
        self.memo[key] = total
        return total


def col(g: Graph, L: ListAssignment) -> int:
    """Number of proper colorings of g with each vertex colored from its list."""
    if not isinstance(L, ListAssignment):
        L = ListAssignment(L)
    _check(g, L)
    if any(not s for s in L):
        return 0
    return _Counter(g).count(frozenset(g.vertices()), dict(enumerate(L)))


def col_uniform(g: Graph, n: int) -> int:
    """col(g, n): every list is {1..n}; the chromatic polynomial at n."""
    if n < 1:
        raise InputError("n must be at least 1")
    return col(g, ListAssignment.uniform(g.vertex_count, n))


def induce(g: Graph, L: ListAssignment, pins: Iterable) -> tuple[Graph, ListAssignment]:
    """Delete the pinned vertices and strike each pin color from its neighbours.

    The result keeps the unpinned vertices in increasing order of their
    original ids.
    """
    _check(g, L)
    pins = _check_pins(g, L, pins)
    pinned = {p.vertex for p in pins}
    keep = [v for v in g.vertices() if v not in pinned]
    lists = []
    for v in keep:
        banned = {c for u, c in pins if g.has_edge(u, v)}
        lists.append(L[v] - banned)
    sub, _ = g.induced_subgraph(keep)
    return sub, ListAssignment(lists)


def col_pinned(g: Graph, L: ListAssignment, pins: Iterable) -> int:
    """Colorings from L that give each pinned vertex its pinned color."""
    pins = list(pins)
    _check(g, L)
    checked = _check_pins(g, L, pins)
    for (u, cu) in checked:
        for (v, cv) in checked:
            if u < v and cu == cv and g.has_edge(u, v):
                return 0
    sub, lists = induce(g, L, checked)
    return col(sub, lists)


def find_coloring(g: Graph, L: ListAssignment) -> list[int] | None:
    """One proper coloring from L (as a color per vertex), or None."""
    _check(g, L)
    order = sorted(g.vertices(), key=lambda v: (len(L[v]), -g.degree(v), v))
    gamma = [None] * g.vertex_count

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        taken = {gamma[w] for w in g.neighbors(v)}
        for c in sorted(L[v]):
            if c not in taken:
                gamma[v] = c
                if place(i + 1):
                    return True
        gamma[v] = None
        return False

    return gamma if place(0) else None


def is_proper_coloring(g: Graph, L: ListAssignment, gamma: Sequence[int]) -> bool:
    return (len(gamma) == g.vertex_count
            and all(gamma[v] in L[v] for v in g.vertices())
            and all(gamma[u] != gamma[v] for u, v in g.edges))


def col_brute_force(g: Graph, L: ListAssignment) -> int:
    """Reference count by trying every function v -> L(v)."""
    _check(g, L)
    edges = g.sorted_edges()
    lists = [sorted(s) for s in L]
    return sum(1 for gamma in product(*lists) if all(gamma[u] != gamma[v] for u, v in edges))


def side_of_edge(g: Graph, u: int, v: int) -> set[int] | None:
    """Vertices reachable from v once edge uv is removed; None if uv is not a cut edge."""
    if not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge")
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if x == v and y == u:
                continue
            if y == u:
                return None
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def separating_edge_surgery(g: Graph, L: ListAssignment, bridge: tuple[int, int]) -> ListAssignment:
    """Swap colors on the far side of a cut edge until its end lists are nested.

    While ``L(v1)`` and ``L(v2)`` are incomparable, take the least
    ``c1 in L(v1) - L(v2)`` and ``c2 in L(v2) - L(v1)`` and exchange them in
    every list on v2's side.  Each round grows ``L(v1) & L(v2)``, list sizes
    are preserved and the count never goes up.
    """
    _check(g, L)
    v1, v2 = bridge
    side = side_of_edge(g, v1, v2)
    if side is None:
        raise InputError(f"({v1}, {v2}) is not a cut edge")
    lists = list(L)
    while not (lists[v1] <= lists[v2] or lists[v2] <= lists[v1]):
        c1 = min(lists[v1] - lists[v2])
        c2 = min(lists[v2] - lists[v1])
        swap = {c1: c2, c2: c1}
        for v in side:
            lists[v] = frozenset(swap.get(c, c) for c in lists[v])
    return ListAssignment(lists)
