"""Exhaustive search over list assignments up to renaming of colors.

A list assignment is determined, up to renaming colors, by its incidence
matrix (rows = vertices, columns = colors) up to permutation of columns.
We generate one matrix per class: rows are filled in vertex order and the
columns are kept sorted, so within a group of columns that agree on every
earlier row the ones come first, and brand-new colors are appended on the
right.  Colors of the emitted representative are numbered by column, which
makes them appear in first-use order; the traversal visits classes in
increasing lexicographic order of their serialized lists.

While rows are placed, the number of colorings of the already-listed
prefix is carried along as a frontier table (colors of processed vertices
that still have unprocessed neighbours -> multiplicity).  That gives the
count at the leaves for free and a lower bound for pruning on the way.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .counting import ListAssignment, col, col_uniform
from .errors import BudgetExceeded, InputError
from .graph import Graph, bridges, connected_components, core_vertices

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "MONOPHILIC_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"{BUDGET_ENV} must be positive")
    return value


def _sizes(g: Graph, n=None, sizes=None) -> list[int]:
    if sizes is None:
        if n is None or n < 1:
            raise InputError("list size n must be at least 1")
        sizes = [n] * g.vertex_count
    sizes = list(sizes)
    if len(sizes) != g.vertex_count:
        raise InputError("need one list size per vertex")
    if any(s < 1 for s in sizes):
        raise InputError("list sizes must be at least 1")
    if g.vertex_count == 0:
        raise InputError("graph has no vertices")
    return sizes


def _row_choices(blocks, ncols, s):
    """Ways to put ``s`` ones in the next row.

    ``blocks`` are (start, length) runs of columns that agree on all earlier
    rows.  Yields (chosen columns, refined blocks, new column count), in
    increasing lexicographic order of the chosen columns.
    """
    nb = len(blocks)

    def rec(b, remaining, picked, refined):
        if b == nb:
            cols = picked + tuple(range(ncols, ncols + remaining))
            tail = ((ncols, remaining),) if remaining else ()
            yield cols, refined + tail, ncols + remaining
            return
        start, length = blocks[b]
        for k in range(min(length, remaining), -1, -1):
            parts = ()
            if k:
                parts += ((start, k),)
            if length - k:
                parts += ((start + k, length - k),)
            yield from rec(b + 1, remaining - k, picked + tuple(range(start, start + k)), refined + parts)

    yield from rec(0, s, (), ())


def _to_assignment(rows) -> ListAssignment:
    return ListAssignment([[c + 1 for c in row] for row in rows])


def enumerate_assignments(g: Graph, n: int | None = None, *, sizes: Sequence[int] | None = None,
                          max_colors: int | None = None, budget: int | None = None) -> Iterator[ListAssignment]:
    """Yield one representative per class of list assignments under color renaming.

    Lists have size ``n`` (or ``sizes[v]``); with ``max_colors`` only classes
    using at most that many distinct colors are produced.  Raises
    BudgetExceeded after ``budget`` partial assignments.
    """
    sizes = _sizes(g, n, sizes)
    budget = default_budget() if budget is None else budget
    V = g.vertex_count
    capacity = [sum(sizes[i:]) for i in range(V + 1)]
    visited = 0
    rows = []

    def rec(i, blocks, ncols):
        nonlocal visited
        if i == V:
            yield _to_assignment(rows)
            return
        for cols, refined, nc in _row_choices(blocks, ncols, sizes[i]):
            if max_colors is not None and nc > max_colors:
                continue
            visited += 1
            if visited > budget:
                raise BudgetExceeded(budget, visited)
            rows.append(cols)
            yield from rec(i + 1, refined, nc)
            rows.pop()

    if max_colors is None or max_colors >= max(sizes):
        yield from rec(0, (), 0)


def canonical_key(L: ListAssignment, order: Sequence[int] | None = None) -> tuple:
    """Complete invariant of L under color renaming: its sorted column patterns."""
    order = range(len(L)) if order is None else order
    columns = [tuple(1 if c in L[v] else 0 for v in order) for c in L.colors()]
    return tuple(sorted(columns, reverse=True))


def canonicalize(L: ListAssignment) -> ListAssignment:
    """The representative of L's class that enumerate_assignments emits."""
    key = canonical_key(L)
    return ListAssignment([[j + 1 for j, column in enumerate(key) if column[v]] for v in range(len(L))])


# ------------------------------------------------------------------ engine

class _Plan:
    """Per-vertex bookkeeping for the frontier table, fixed by the vertex order 0..V-1."""

    def __init__(self, g: Graph, sizes, restrict_bridges: bool):
        V = g.vertex_count
        last = [max(g.neighbors(v) | {v}) for v in g.vertices()]
        frontier = []
        self.back = []
        self.keep = []
        for i in g.vertices():
            self.back.append(tuple(frontier.index(j) for j in sorted(g.neighbors(i)) if j < i))
            extended = frontier + [i]
            new = [j for j in extended if last[j] > i]
            self.keep.append(tuple(extended.index(j) for j in new))
            frontier = new
        # each coloring of a prefix extends in at least prod(size - earlier neighbours) ways
        slack = [max(0, sizes[j] - sum(1 for w in g.neighbors(j) if w < j)) for j in g.vertices()]
        self.extension = [1] * (V + 1)
        for j in range(V - 1, -1, -1):
            self.extension[j] = self.extension[j + 1] * slack[j]
        self.capacity = [sum(sizes[i:]) for i in range(V + 1)]
        self.bridge_partners = [[] for _ in range(V)]
        if restrict_bridges:
            for u, v in bridges(g):
                self.bridge_partners[v].append(u)


def _advance(states, back, keep, colors):
    out = defaultdict(int)
    for state, mult in states.items():
        used = {state[p] for p in back}
        for c in colors:
            if c in used:
                continue
            ext = state + (c,)
            key = tuple(ext[k] for k in keep)
            out[key] += mult
    return out


def _nested(a, b):
    sa, sb = set(a), set(b)
    return sa <= sb or sb <= sa


class _Run:
    def __init__(self, g, sizes, *, bound, stop_below, prune, budget, colors=None, collect=None):
        self.g = g
        self.sizes = sizes
        # collecting every class below the bound must not skip non-nested ones
        self.plan = _Plan(g, sizes, restrict_bridges=prune and collect is None)
        self.collect = collect
        self.best = bound
        self.witness = None
        self.stop_below = stop_below
        self.prune = prune
        self.budget = budget
        # (lo, hi): only classes using between lo and hi distinct colors
        self.colors = colors
        self.visited = 0
        self.done = False
        self.rows = []

    def children(self, i, blocks, ncols, states):
        plan, window = self.plan, self.colors
        for cols, refined, nc in _row_choices(blocks, ncols, self.sizes[i]):
            if window is not None and (nc > window[1] or window[0] - nc > plan.capacity[i + 1]):
                continue
            if any(not _nested(cols, self.rows[u]) for u in plan.bridge_partners[i]):
                continue
            new_states = _advance(states, plan.back[i], plan.keep[i], cols)
            if self.prune and self.best is not None:
                if sum(new_states.values()) * plan.extension[i + 1] >= self.best:
                    continue
            yield cols, refined, nc, new_states

    def dfs(self, i, blocks, ncols, states):
        if i == self.g.vertex_count:
            total = sum(states.values())
            if self.collect is not None:
                if total < self.best:
                    self.collect.append((list(self.rows), total))
                return
            if self.best is None or total < self.best:
                self.best = total
                self.witness = list(self.rows)
                if total == 0 or (self.stop_below is not None and total < self.stop_below):
                    self.done = True
            return
        for cols, refined, nc, new_states in self.children(i, blocks, ncols, states):
            self.visited += 1
            if self.visited > self.budget:
                raise BudgetExceeded(self.budget, self.visited)
            self.rows.append(cols)
            self.dfs(i + 1, refined, nc, new_states)
            self.rows.pop()
            if self.done:
                return

    def run_from(self, prefix):
        """Search the subtree below a fixed sequence of rows."""
        blocks, ncols, states = (), 0, {(): 1}
        for i, cols in enumerate(prefix):
            for c, refined, nc, new_states in self.children(i, blocks, ncols, states):
                if c == cols:
                    blocks, ncols, states = refined, nc, new_states
                    break
            else:
                return
            self.rows.append(cols)
        self.dfs(len(prefix), blocks, ncols, states)
        del self.rows[:]


def _prefixes(g, sizes, depth, prune):
    run = _Run(g, sizes, bound=None, stop_below=None, prune=False, budget=DEFAULT_BUDGET)
    out = []

    def rec(i, blocks, ncols, states):
        if i == min(depth, g.vertex_count):
            out.append(tuple(run.rows))
            return
        for cols, refined, nc, new_states in run.children(i, blocks, ncols, states):
            run.rows.append(cols)
            rec(i + 1, refined, nc, new_states)
            run.rows.pop()

    rec(0, (), 0, {(): 1})
    return out


def _run_task(args):
    g, sizes, prefix, bound, stop_below, prune, budget, colors = args
    run = _Run(g, sizes, bound=bound, stop_below=stop_below, prune=prune, budget=budget, colors=colors)
    run.run_from(prefix)
    return run.best, run.witness, run.visited


def _search(g, sizes, *, bound=None, stop_below=None, prune=True, budget=None,
            colors=None, threads=1):
    """Smallest count strictly below ``bound`` (first such class in traversal order).

    Returns (best, witness rows or None, nodes visited).  ``best`` stays at
    ``bound`` when nothing smaller exists.
    """
    budget = default_budget() if budget is None else budget
    if threads <= 1:
        run = _Run(g, sizes, bound=bound, stop_below=stop_below, prune=prune, budget=budget,
                   colors=colors)
        run.dfs(0, (), 0, {(): 1})
        return run.best, run.witness, run.visited
    prefixes = _prefixes(g, sizes, 3, prune)
    tasks = [(g, sizes, p, bound, stop_below, prune, budget, colors) for p in prefixes]
    best, witness, visited = bound, None, 0
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for b, w, v in pool.map(_run_task, tasks):
            visited += v
            if w is not None and (best is None or b < best):
                best, witness = b, w
    if visited > budget:
        raise BudgetExceeded(budget, visited)
    return best, witness, visited


def assignments_below(g: Graph, n: int | None = None, bound: int = 1, *, sizes=None,
                      budget: int | None = None) -> list[tuple[ListAssignment, int]]:
    """Every class (canonical representative, count) with col < bound."""
    sizes = _sizes(g, n, sizes)
    found = []
    run = _Run(g, sizes, bound=bound, stop_below=None, prune=True,
               budget=default_budget() if budget is None else budget, collect=found)
    run.dfs(0, (), 0, {(): 1})
    return [(_to_assignment(rows), total) for rows, total in found]


# --------------------------------------------------------------- decisions

@dataclass
class MinResult:
    count: int
    witness: ListAssignment
    nodes_visited: int = 0


def min_colorings(g: Graph, n: int | None = None, *, sizes=None, prune: bool = True,
                  budget: int | None = None, threads: int = 1) -> MinResult:
    """Exact minimum of col(g, L) over all list assignments with the given sizes.

    The witness is the lexicographically least canonical class attaining the
    minimum among the classes searched; with ``prune`` the search is limited
    to assignments whose lists are nested across every cut edge, which
    never loses the minimum.
    """
    sizes = _sizes(g, n, sizes)
    bound, base = None, None
    if len(set(sizes)) == 1:
        base = ListAssignment.uniform(g.vertex_count, sizes[0])
        bound = col(g, base)
    best, rows, visited = _search(g, sizes, bound=bound, prune=prune, budget=budget, threads=threads)
    if rows is None:
        return MinResult(bound, base, visited)
    return MinResult(best, _to_assignment(rows), visited)


def _decide_below(g, sizes, target, budget, threads, deepening=3):
    """Find some class with count < target.

    Witnesses tend to use few colors, so the first ``deepening`` passes each
    look only at classes with exactly U colors (U = max size, max size + 1,
    ...); one last pass covers everything with more colors.
    """
    total_budget = default_budget() if budget is None else budget
    visited = 0
    lo = max(sizes)
    top = sum(sizes)
    windows = [(U, U) for U in range(lo, min(lo + deepening, top + 1))]
    if lo + deepening <= top:
        windows.append((lo + deepening, top))
    for window in windows:
        try:
            best, rows, v = _search(g, sizes, bound=target, stop_below=target, prune=True,
                                    budget=total_budget - visited, colors=window, threads=threads)
        except BudgetExceeded as exc:
            raise BudgetExceeded(total_budget, visited + exc.visited) from None
        visited += v
        if rows is not None:
            return best, _to_assignment(rows), visited
    return None, None, visited


def _lift(g: Graph, kept: list[int], sub_lists: ListAssignment) -> ListAssignment:
    """Extend lists on the core vertices to g; each pruned vertex copies the list
    of its neighbour on the way to the core."""
    lists = [None] * g.vertex_count
    for i, v in enumerate(kept):
        lists[v] = sub_lists[i]
    frontier = list(kept)
    while frontier:
        nxt = []
        for u in frontier:
            for w in sorted(g.neighbors(u)):
                if lists[w] is None:
                    lists[w] = lists[u]
                    nxt.append(w)
        frontier = nxt
    return ListAssignment(lists)


def _embed(g: Graph, parts, n: int) -> ListAssignment:
    """Assemble a whole-graph assignment from per-component ones (uniform elsewhere)."""
    lists = [frozenset(range(1, n + 1))] * g.vertex_count
    for comp, L in parts:
        for i, v in enumerate(comp):
            lists[v] = L[i]
    return ListAssignment(lists)


@dataclass
class MonophilicVerdict:
    """Outcome of an n-monophilicity decision.

    ``min_count`` is exact when ``min_exact``; when a witness below the
    uniform count ends the search early it is that witness's count.
    """

    monophilic: bool
    uniform_count: int
    min_count: int
    witness: ListAssignment | None
    vacuous: bool = False
    min_exact: bool = True
    nodes_visited: int = 0


def _component_monophilic(comp: Graph, n, budget, threads, exact):
    kept = core_vertices(comp)
    core_graph, _ = comp.induced_subgraph(kept)
    factor = (n - 1) ** (comp.vertex_count - len(kept))
    uniform_core = col_uniform(core_graph, n)
    uniform = uniform_core * factor
    if uniform == 0:
        return uniform, 0, True, None, 0
    if exact:
        res = min_colorings(core_graph, n, budget=budget, threads=threads)
        if res.count < uniform_core:
            return uniform, res.count * factor, True, _lift(comp, kept, res.witness), res.nodes_visited
        return uniform, uniform, True, None, res.nodes_visited
    best, L, visited = _decide_below(core_graph, [n] * core_graph.vertex_count, uniform_core, budget, threads)
    if L is None:
        return uniform, uniform, True, None, visited
    return uniform, best * factor, best == 0, _lift(comp, kept, L), visited


def is_monophilic(g: Graph, n: int, *, budget: int | None = None, threads: int = 1,
                  exact_min: bool = False) -> MonophilicVerdict:
    """Decide whether col(g, n) <= col(g, L) for every n-list assignment L.

    Components and cores are searched separately (a pruned pendant vertex
    multiplies both sides by n-1).  A zero uniform count is reported as
    monophilic with ``vacuous`` set.
    """
    if n < 1:
        raise InputError("n must be at least 1")
    comps = connected_components(g)
    uniform = col_uniform(g, n)
    if uniform == 0:
        return MonophilicVerdict(True, 0, 0, None, vacuous=True)
    visited = 0
    results = []
    for comp in comps:
        sub, _ = g.induced_subgraph(comp)
        u, m, m_exact, w, v = _component_monophilic(sub, n, budget, threads, exact_min)
        visited += v
        results.append((comp, u, m, m_exact, w))
        if w is not None and not exact_min:
            break
    losers = [(comp, u, m, w) for comp, u, m, _, w in results if w is not None]
    if not losers:
        return MonophilicVerdict(True, uniform, uniform, None, nodes_visited=visited)
    witness = _embed(g, [(comp, w) for comp, _, _, w in losers], n)
    min_count = uniform
    for comp, u, m, w in losers:
        min_count = min_count // u * m
    exact = all(m_exact for *_, m_exact, _ in results) and (exact_min or min_count == 0)
    return MonophilicVerdict(False, uniform, min_count, witness, min_exact=exact, nodes_visited=visited)


@dataclass
class ChoosabilityResult:
    choosable: bool
    witness: ListAssignment | None = None
    nodes_visited: int = 0


def is_choosable(g: Graph, n: int, *, budget: int | None = None, threads: int = 1) -> ChoosabilityResult:
    """Decide whether every n-list assignment admits a proper coloring.

    For n >= 2 a degree-1 vertex can always be colored last, so each
    component is decided on its core.
    """
    if n < 1:
        raise InputError("n must be at least 1")
    if n == 1:
        if g.edge_count == 0:
            return ChoosabilityResult(True)
        return ChoosabilityResult(False, ListAssignment.uniform(g.vertex_count, 1))
    visited = 0
    for comp in connected_components(g):
        sub, _ = g.induced_subgraph(comp)
        kept = core_vertices(sub)
        core_graph, _ = sub.induced_subgraph(kept)
        uniform = ListAssignment.uniform(core_graph.vertex_count, n)
        if col(core_graph, uniform) == 0:
            found = uniform
        else:
            _, found, v = _decide_below(core_graph, [n] * core_graph.vertex_count, 1, budget, threads)
            visited += v
        if found is not None:
            witness = _embed(g, [(comp, _lift(sub, kept, found))], n)
            return ChoosabilityResult(False, witness, visited)
    return ChoosabilityResult(True, None, visited)


@dataclass
class ProbeRow:
    n: int
    colorable: bool
    monophilic: bool | None  # None: search budget exhausted
    vacuous: bool = False


@dataclass
class ProbeResult:
    rows: list[ProbeRow] = field(default_factory=list)
    # smallest n that is colorable and monophilic, if settled within range
    first_definition: int | None = None
    # every n' below this bound fails monophilicity somewhere at or above n'
    second_definition_lower_bound: int = 1


def monophilic_number_probe(g: Graph, n_max: int, *, budget: int | None = None, threads: int = 1) -> ProbeResult:
    """Per-n colorability and monophilicity for n = 1..n_max.

    The second candidate definition quantifies over all n' >= n, so only a
    lower bound is certified: one more than the largest failing n seen.
    """
    result = ProbeResult()
    settled = True
    for n in range(1, n_max + 1):
        colorable = col_uniform(g, n) >= 1
        try:
            verdict = is_monophilic(g, n, budget=budget, threads=threads)
            mono, vacuous = verdict.monophilic, verdict.vacuous
        except BudgetExceeded:
            mono, vacuous = None, False
        result.rows.append(ProbeRow(n, colorable, mono, vacuous))
        if mono is None:
            settled = False
        if mono is False:
            result.second_definition_lower_bound = n + 1
        if settled and result.first_definition is None and colorable and mono:
            result.first_definition = n
    return result
